// Command-line driver; talks to the shared library exclusively through the
// public C interface in qar.h.
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "qar.h"

namespace {

int emit(qar_status st, qar_report* rep, const std::string& format) {
    if (st != QAR_OK) {
        std::fprintf(stderr, "error: %s\n", qar_last_error());
        return st == QAR_E_INTERNAL ? 4 : 2;
    }
    if (format == "json") {
        std::printf("%s\n", qar_report_json(rep));
    } else if (format == "dot") {
        const char* dot = qar_report_dot(rep);
        if (!dot) {
            std::fprintf(stderr, "error: this command has no graph payload\n");
            qar_report_free(rep);
            return 2;
        }
        std::printf("%s", dot);
    } else {
        std::printf("%s", qar_report_text(rep));
    }
    int rc = qar_report_passed(rep) ? 0 : 1;
    qar_report_free(rep);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Auslander-Reiten combinatorics and R-matrix pole data for quantum affine algebras (types A and D)"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format: text, json, dot")->capture_default_str();

    std::string type = "D";
    int rank = 4, k = 1, l = 1;
    std::string arrows;
    bool all_orient = false;
    int jobs = 0;
    int base_vertex = 1, base_value = 0;

    auto add_type_rank = [&](CLI::App* cmd, bool with_arrows) {
        cmd->add_option("--type", type, "Cartan family: A, D or E")->capture_default_str();
        cmd->add_option("--rank", rank, "rank of the finite part")->required();
        if (with_arrows) {
            cmd->add_option("--arrows", arrows, "orientation, e.g. 1-2,3-2 (default: ascending)");
            cmd->add_option("--xi-base", base_vertex, "base vertex of the height function");
            cmd->add_option("--xi-value", base_value, "height at the base vertex");
        }
    };

    auto* denom = app.add_subcommand("denom", "closed-form R-matrix denominator d_{k,l}(z)");
    add_type_rank(denom, false);
    denom->add_option("--k", k, "first node")->required();
    denom->add_option("--l", l, "second node")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "thm42, lemma34, combinatorics or all")->required();
    add_type_rank(verify, true);
    verify->add_flag("--all-orientations", all_orient, "scan every orientation of the diagram");
    verify->add_option("--jobs", jobs, "worker threads (default: QAR_JOBS or hardware)");

    auto* phi = app.add_subcommand("phi", "the vertex/root bijection and the AR quiver");
    add_type_rank(phi, true);
    bool print_ar = false;
    phi->add_flag("--print-ar", print_ar, "also list the AR-quiver arrows");

    std::string window;
    phi->add_option("--window", window, "repetition-quiver window lo:hi for the dot payload");

    auto* gammaj = app.add_subcommand("gammaj", "pole-order quiver on the J-datum");
    add_type_rank(gammaj, true);

    auto* quiver_cmd = app.add_subcommand("quiver", "validate and echo one orientation");
    add_type_rank(quiver_cmd, true);

    auto* qpoch = app.add_subcommand("qpoch", "infinite-product scalar identities");
    auto* qpoch_verify = qpoch->add_subcommand("verify", "recursion vs closed form at one rank");
    qpoch_verify->add_option("--rank", rank, "rank")->required();

    auto* rmatrix = app.add_subcommand("rmatrix", "exact intertwiners for type D");
    std::string action, rep_a = "vector", rep_b;
    rmatrix->add_option("action", action, "build, check, denominator or fusion")->required();
    rmatrix->add_option("--rep", rep_a, "vector, spin+ or spin-")->capture_default_str();
    rmatrix->add_option("--rep2", rep_b, "second representation (default: --rep)");
    rmatrix->add_option("--rank", rank, "rank")->required();
    rmatrix->add_option("--k", k, "fusion index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    qar_report* rep = nullptr;
    qar_status st = QAR_E_INVALID_ARGUMENT;
    const char* arr = arrows.empty() ? nullptr : arrows.c_str();
    if (*denom) {
        st = qar_denom(type[0], rank, k, l, &rep);
    } else if (*verify) {
        st = qar_verify(suite.c_str(), type[0], rank, arr, all_orient ? 1 : 0, jobs, &rep);
    } else if (*phi) {
        if (!window.empty()) {
            auto colon = window.find(':');
            if (colon == std::string::npos) {
                std::fprintf(stderr, "error: --window expects lo:hi\n");
                return 2;
            }
            st = qar_phi_window(type[0], rank, arr, base_vertex, base_value,
                                std::stoi(window.substr(0, colon)),
                                std::stoi(window.substr(colon + 1)), &rep);
        } else {
            st = qar_phi(type[0], rank, arr, base_vertex, base_value, print_ar ? 1 : 0, &rep);
        }
    } else if (*gammaj) {
        st = qar_gammaj(type[0], rank, arr, base_vertex, base_value, &rep);
    } else if (*quiver_cmd) {
        st = qar_quiver(type[0], rank, arr, &rep);
    } else if (*qpoch) {
        st = qar_qpoch_verify(rank, &rep);
    } else if (*rmatrix) {
        if (action == "fusion")
            st = qar_fusion(k, rank, &rep);
        else
            st = qar_rmatrix(action.c_str(), rep_a.c_str(), rep_b.empty() ? nullptr : rep_b.c_str(),
                             rank, &rep);
    }
    return emit(st, rep, format);
}
