#include <cstring>
#include <string>

#include "doctest.h"
#include "qar.h"

TEST_CASE("denominator over the C interface") {
    qar_report* rep = nullptr;
    REQUIRE(qar_denom('D', 4, 1, 1, &rep) == QAR_OK);
    REQUIRE(rep != nullptr);
    CHECK(qar_report_passed(rep) == 1);
    std::string json = qar_report_json(rep);
    CHECK(json.find("\"exponents\"") != std::string::npos);
    CHECK(json.find("2") != std::string::npos);
    std::string text = qar_report_text(rep);
    CHECK(text.find("(z - (-q)^2)(z - (-q)^6)") != std::string::npos);
    CHECK(qar_report_dot(rep) == nullptr);
    qar_report_free(rep);
}

TEST_CASE("invalid arguments surface as status codes") {
    qar_report* rep = nullptr;
    CHECK(qar_denom('D', 3, 1, 1, &rep) == QAR_E_INVALID_ARGUMENT);
    CHECK(rep == nullptr);
    CHECK(std::strlen(qar_last_error()) > 0);
    CHECK(qar_denom('E', 6, 1, 2, &rep) == QAR_E_UNSUPPORTED);
    CHECK(qar_verify(nullptr, 'D', 4, nullptr, 0, 0, &rep) == QAR_E_INVALID_ARGUMENT);
    CHECK(qar_verify("nope", 'D', 4, nullptr, 0, 0, &rep) == QAR_E_INVALID_ARGUMENT);
    CHECK(qar_rmatrix("build", "vector", nullptr, 9, &rep) == QAR_E_INVALID_ARGUMENT);
}

TEST_CASE("verification suites over the C interface") {
    qar_report* rep = nullptr;
    REQUIRE(qar_verify("thm42", 'A', 3, nullptr, 1, 2, &rep) == QAR_OK);
    CHECK(qar_report_passed(rep) == 1);
    qar_report_free(rep);
    REQUIRE(qar_verify("all", 'D', 4, "1-2,3-2,4-2", 0, 1, &rep) == QAR_OK);
    CHECK(qar_report_passed(rep) == 1);
    qar_report_free(rep);
}

TEST_CASE("phi and gammaj payloads") {
    qar_report* rep = nullptr;
    REQUIRE(qar_phi('A', 2, "1-2", 1, 1, 1, &rep) == QAR_OK);
    std::string text = qar_report_text(rep);
    CHECK(text.find("phi(1,1) = (1,0)") != std::string::npos);
    CHECK(text.find("phi(2,0) = (1,1)") != std::string::npos);
    CHECK(text.find("ar arrows:") != std::string::npos);
    REQUIRE(qar_report_dot(rep) != nullptr);
    CHECK(std::string(qar_report_dot(rep)).find("digraph") != std::string::npos);
    qar_report_free(rep);

    REQUIRE(qar_gammaj('D', 4, "1-2,3-2,4-2", 1, 0, &rep) == QAR_OK);
    CHECK(qar_report_passed(rep) == 1);
    CHECK(qar_report_dot(rep) != nullptr);
    qar_report_free(rep);
}

TEST_CASE("qpoch identities over the C interface") {
    qar_report* rep = nullptr;
    REQUIRE(qar_qpoch_verify(4, &rep) == QAR_OK);
    CHECK(qar_report_passed(rep) == 1);
    qar_report_free(rep);
}

TEST_CASE("rmatrix denominator over the C interface") {
    qar_report* rep = nullptr;
    REQUIRE(qar_rmatrix("denominator", "vector", nullptr, 4, &rep) == QAR_OK);
    CHECK(qar_report_passed(rep) == 1);
    std::string json = qar_report_json(rep);
    CHECK(json.find("denominator-agreement") != std::string::npos);
    qar_report_free(rep);
}

TEST_CASE("fusion over the C interface") {
    qar_report* rep = nullptr;
    REQUIRE(qar_fusion(2, 4, &rep) == QAR_OK);
    CHECK(qar_report_passed(rep) == 1);
    qar_report_free(rep);
}
