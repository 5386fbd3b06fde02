#include "qar.h"

#include <string>

#include "report/report.hpp"

using qar::Error;
using qar::ErrorKind;

struct qar_report {
    qar::report::Report rep;
    std::string json, text;
    bool has_dot = false;
};

namespace {

thread_local std::string g_last_error;

qar_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::DivisionByZero:
            return QAR_E_INVALID_ARGUMENT;
        case ErrorKind::Unsupported:
            return QAR_E_UNSUPPORTED;
        case ErrorKind::Internal:
            return QAR_E_INTERNAL;
    }
    return QAR_E_INTERNAL;
}

template <class Fn>
qar_status wrap(qar_report** out, Fn&& fn) {
    if (!out) {
        g_last_error = "output handle is null";
        return QAR_E_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto* r = new qar_report;
        r->rep = fn();
        r->json = r->rep.to_json();
        r->text = r->rep.to_text();
        r->has_dot = !r->rep.dot.empty();
        *out = r;
        g_last_error.clear();
        return QAR_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QAR_E_INTERNAL;
    }
}

std::string s_or(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

qar_status qar_denom(char family, int rank, int k, int l, qar_report** out) {
    return wrap(out, [&] { return qar::report::run_denom(family, rank, k, l); });
}

qar_status qar_quiver(char family, int rank, const char* arrows, qar_report** out) {
    return wrap(out, [&] { return qar::report::run_quiver(family, rank, s_or(arrows)); });
}

qar_status qar_verify(const char* suite, char family, int rank, const char* arrows,
                      int all_orientations, int jobs, qar_report** out) {
    if (!suite) {
        g_last_error = "suite is null";
        return QAR_E_INVALID_ARGUMENT;
    }
    return wrap(out, [&] {
        return qar::report::run_verify(suite, family, rank, s_or(arrows), all_orientations != 0,
                                       jobs);
    });
}

qar_status qar_phi(char family, int rank, const char* arrows, int base_vertex, int base_value,
                   int print_ar, qar_report** out) {
    return wrap(out, [&] {
        return qar::report::run_phi(family, rank, s_or(arrows), base_vertex, base_value,
                                    print_ar != 0);
    });
}

qar_status qar_phi_window(char family, int rank, const char* arrows, int base_vertex,
                          int base_value, int p_lo, int p_hi, qar_report** out) {
    return wrap(out, [&] {
        return qar::report::run_phi(family, rank, s_or(arrows), base_vertex, base_value, true,
                                    true, p_lo, p_hi);
    });
}

qar_status qar_gammaj(char family, int rank, const char* arrows, int base_vertex, int base_value,
                      qar_report** out) {
    return wrap(out, [&] {
        return qar::report::run_gammaj(family, rank, s_or(arrows), base_vertex, base_value);
    });
}

qar_status qar_qpoch_verify(int rank, qar_report** out) {
    return wrap(out, [&] { return qar::report::run_qpoch_verify(rank); });
}

qar_status qar_rmatrix(const char* action, const char* rep_a, const char* rep_b, int rank,
                       qar_report** out) {
    if (!action || !rep_a) {
        g_last_error = "action and rep_a must be non-null";
        return QAR_E_INVALID_ARGUMENT;
    }
    return wrap(out,
                [&] { return qar::report::run_rmatrix(action, rep_a, s_or(rep_b), rank); });
}

qar_status qar_fusion(int k, int rank, qar_report** out) {
    return wrap(out, [&] { return qar::report::run_fusion(k, rank); });
}

int qar_report_passed(const qar_report* r) { return r && r->rep.passed ? 1 : 0; }

const char* qar_report_json(const qar_report* r) { return r ? r->json.c_str() : nullptr; }

const char* qar_report_text(const qar_report* r) { return r ? r->text.c_str() : nullptr; }

const char* qar_report_dot(const qar_report* r) {
    return (r && r->has_dot) ? r->rep.dot.c_str() : nullptr;
}

void qar_report_free(qar_report* r) { delete r; }

const char* qar_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
