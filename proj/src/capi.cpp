#include "mrac/mrac.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "nominal.hpp"
#include "scenario.hpp"
#include "scenario_io.hpp"
#include "certificate.hpp"
#include "simulate.hpp"
#include "verify.hpp"

struct mrac_scenario {
    mrac::Scenario scn;
};

struct mrac_design {
    mrac::Wiring wiring;
};

struct mrac_trace {
    mrac::Trace trace;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        int code = fn();
        if (code == MRAC_OK) g_last_error.clear();
        return code;
    } catch (const mrac::parse_error& e) {
        return fail(MRAC_ERR_PARSE, e.what());
    } catch (const mrac::assumption_error& e) {
        return fail(MRAC_ERR_ASSUMPTION, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(MRAC_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(MRAC_ERR_INTERNAL, "out of memory");
    } catch (const std::runtime_error& e) {
        return fail(MRAC_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(MRAC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MRAC_ERR_INTERNAL, "unknown failure");
    }
}

// Copies a string into malloc storage so callers free it with mrac_text_free.
int copy_text(const std::string& text, char** out) {
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) return fail(MRAC_ERR_INTERNAL, "out of memory");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return MRAC_OK;
}

int require(bool ok, const char* what) {
    if (ok) return MRAC_OK;
    return fail(MRAC_ERR_INVALID, what);
}

}  // namespace

extern "C" {

const char* mrac_status_name(int status) {
    switch (status) {
        case MRAC_OK: return "ok";
        case MRAC_ERR_PARSE: return "parse error";
        case MRAC_ERR_ASSUMPTION: return "assumption violation";
        case MRAC_ERR_DIVERGED: return "diverged";
        case MRAC_ERR_INVALID: return "invalid argument";
        case MRAC_ERR_IO: return "io error";
        case MRAC_ERR_INTERNAL: return "internal error";
        default: return "unknown status";
    }
}

const char* mrac_last_error(void) { return g_last_error.c_str(); }

void mrac_text_free(char* text) { std::free(text); }

int mrac_scenario_load(const char* path, mrac_scenario** out) {
    if (int rc = require(path != nullptr && out != nullptr, "mrac_scenario_load: null argument"))
        return rc;
    return guarded([&] {
        auto* handle = new mrac_scenario{mrac::load_scenario(path)};
        *out = handle;
        return MRAC_OK;
    });
}

int mrac_scenario_parse(const char* text, const char* name, mrac_scenario** out) {
    if (int rc = require(text != nullptr && out != nullptr, "mrac_scenario_parse: null argument"))
        return rc;
    return guarded([&] {
        std::string label = (name != nullptr && name[0] != '\0') ? name : "scenario";
        auto* handle = new mrac_scenario{mrac::parse_scenario_text(text, label)};
        *out = handle;
        return MRAC_OK;
    });
}

void mrac_scenario_free(mrac_scenario* scn) { delete scn; }

int mrac_scenario_set_scheme(mrac_scenario* scn, const char* scheme) {
    if (int rc = require(scn != nullptr && scheme != nullptr,
                         "mrac_scenario_set_scheme: null argument"))
        return rc;
    return guarded([&] {
        scn->scn.scheme = mrac::parse_scheme(scheme);
        scn->scn.validate();
        return MRAC_OK;
    });
}

int mrac_scenario_set_dt(mrac_scenario* scn, double dt) {
    if (int rc = require(scn != nullptr, "mrac_scenario_set_dt: null argument")) return rc;
    return guarded([&] {
        if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
        scn->scn.dt = dt;
        scn->scn.validate();
        return MRAC_OK;
    });
}

int mrac_scenario_set_horizon(mrac_scenario* scn, double horizon) {
    if (int rc = require(scn != nullptr, "mrac_scenario_set_horizon: null argument")) return rc;
    return guarded([&] {
        if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
        scn->scn.horizon = horizon;
        scn->scn.validate();
        return MRAC_OK;
    });
}

int mrac_design_compute(const mrac_scenario* scn, mrac_design** out) {
    if (int rc = require(scn != nullptr && out != nullptr, "mrac_design_compute: null argument"))
        return rc;
    return guarded([&] {
        auto* handle = new mrac_design{mrac::make_wiring(scn->scn)};
        *out = handle;
        return MRAC_OK;
    });
}

void mrac_design_free(mrac_design* design) { delete design; }

int mrac_design_certificate(const mrac_design* design, char** text_out) {
    if (int rc = require(design != nullptr && text_out != nullptr,
                         "mrac_design_certificate: null argument"))
        return rc;
    return guarded([&] { return copy_text(mrac::design_certificate(design->wiring), text_out); });
}

int mrac_design_theta_star(const mrac_design* design, double* buf, int* len) {
    if (int rc = require(design != nullptr && len != nullptr,
                         "mrac_design_theta_star: null argument"))
        return rc;
    const auto& theta = design->wiring.nominal.theta_star;
    int p = static_cast<int>(theta.size());
    if (buf == nullptr) {
        *len = p;
        g_last_error.clear();
        return MRAC_OK;
    }
    if (*len < p) return fail(MRAC_ERR_INVALID, "mrac_design_theta_star: buffer too small");
    std::memcpy(buf, theta.data(), sizeof(double) * static_cast<size_t>(p));
    *len = p;
    g_last_error.clear();
    return MRAC_OK;
}

int mrac_design_rho_star(const mrac_design* design, double* out) {
    if (int rc = require(design != nullptr && out != nullptr,
                         "mrac_design_rho_star: null argument"))
        return rc;
    *out = design->wiring.nominal.rho_star;
    g_last_error.clear();
    return MRAC_OK;
}

int mrac_verify(const mrac_scenario* scn, char** report_out, int* all_pass) {
    if (int rc = require(scn != nullptr && report_out != nullptr && all_pass != nullptr,
                         "mrac_verify: null argument"))
        return rc;
    return guarded([&] {
        mrac::Wiring w = mrac::make_wiring(scn->scn);
        mrac::VerifyReport report = mrac::verify_design(w);
        *all_pass = report.all_pass() ? 1 : 0;
        return copy_text(report.str(), report_out);
    });
}

int mrac_run(const mrac_scenario* scn, mrac_trace** out) {
    if (int rc = require(scn != nullptr && out != nullptr, "mrac_run: null argument")) return rc;
    return guarded([&] {
        auto* handle = new mrac_trace{mrac::integrate(scn->scn)};
        *out = handle;
        if (handle->trace.diverged)
            return fail(MRAC_ERR_DIVERGED, "simulation diverged; partial trace returned");
        return static_cast<int>(MRAC_OK);
    });
}

void mrac_trace_free(mrac_trace* trace) { delete trace; }

int mrac_trace_size(const mrac_trace* trace, long long* out) {
    if (int rc = require(trace != nullptr && out != nullptr, "mrac_trace_size: null argument"))
        return rc;
    *out = static_cast<long long>(trace->trace.size());
    g_last_error.clear();
    return MRAC_OK;
}

int mrac_trace_column(const mrac_trace* trace, const char* name, double* buf, long long* len) {
    if (int rc = require(trace != nullptr && name != nullptr && len != nullptr,
                         "mrac_trace_column: null argument"))
        return rc;
    const std::vector<double>* col = nullptr;
    const mrac::Trace& tr = trace->trace;
    std::string key = name;
    if (key == "t") col = &tr.t;
    else if (key == "y") col = &tr.y;
    else if (key == "y_m") col = &tr.y_m;
    else if (key == "e") col = &tr.e;
    else if (key == "u") col = &tr.u;
    else if (key == "u_m") col = &tr.u_m;
    else if (key == "theta_norm") col = &tr.theta_norm;
    else if (key == "rho") col = &tr.rho;
    else if (key == "eps_over_m") col = &tr.eps_over_m;
    else if (key == "V") col = &tr.V;
    if (col == nullptr)
        return fail(MRAC_ERR_INVALID, "mrac_trace_column: unknown column '" + key + "'");
    long long size = static_cast<long long>(col->size());
    if (buf == nullptr) {
        *len = size;
        g_last_error.clear();
        return MRAC_OK;
    }
    if (*len < size) return fail(MRAC_ERR_INVALID, "mrac_trace_column: buffer too small");
    std::memcpy(buf, col->data(), sizeof(double) * col->size());
    *len = size;
    g_last_error.clear();
    return MRAC_OK;
}

int mrac_trace_write_csv(const mrac_trace* trace, const char* path, int stride) {
    if (int rc = require(trace != nullptr && path != nullptr,
                         "mrac_trace_write_csv: null argument"))
        return rc;
    return guarded([&] {
        if (stride < 1) throw std::invalid_argument("stride must be at least 1");
        mrac::write_csv(trace->trace, path, stride);
        return static_cast<int>(MRAC_OK);
    });
}

int mrac_trace_metrics_line(const mrac_trace* trace, char** text_out) {
    if (int rc = require(trace != nullptr && text_out != nullptr,
                         "mrac_trace_metrics_line: null argument"))
        return rc;
    return guarded(
        [&] { return copy_text(mrac::metrics_line(mrac::metrics(trace->trace)), text_out); });
}

int mrac_trace_diverged(const mrac_trace* trace, int* flag, double* time) {
    if (int rc = require(trace != nullptr && flag != nullptr,
                         "mrac_trace_diverged: null argument"))
        return rc;
    *flag = trace->trace.diverged ? 1 : 0;
    if (time != nullptr) *time = trace->trace.divergence_time;
    g_last_error.clear();
    return MRAC_OK;
}

}  // extern "C"
