#include "torcount/reporting.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>

namespace torcount {

using ordered_json = nlohmann::ordered_json;

namespace {

long long int_ll(const Int& v) {
    if (!v.fits_slong_p()) throw InternalError("count too large for the report encoding");
    return v.get_si();
}

const char* method_str(QuadMethod m) {
    return m == QuadMethod::ADAPTIVE ? "adaptive" : "monte_carlo";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

void put_setup(ordered_json& j, const Setup& s) {
    j["family_n"] = s.n;
    j["boundary"] = boundary_str(s.boundary);
    j["l1"] = rat_str(s.l1());
    j["l2"] = rat_str(s.l2());
}

ordered_json quad_json(const QuadratureReport& r) {
    ordered_json q;
    q["value"] = sig12(r.value);
    q["est_error"] = sig12(r.est_error);
    q["method"] = method_str(r.method);
    q["cells_or_samples"] = r.cells_or_samples;
    if (r.seed) q["seed"] = *r.seed;
    return q;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

double sig12(double v) {
    return std::strtod(real_str(v).c_str(), nullptr);
}

std::string real_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string count_report(const Setup& s, const Int& B, const CountResult& r,
                         OutputFormat f) {
    if (f == OutputFormat::JSON) {
        ordered_json j;
        put_setup(j, s);
        j["B"] = int_ll(B);
        j["count"] = int_ll(r.count);
        j["raw_tuple_count"] = int_ll(r.raw_tuple_count);
        return dump(j);
    }
    std::string out = "n,boundary,l1,l2,B,count,raw_tuple_count\n";
    out += std::to_string(s.n) + "," + boundary_str(s.boundary) + "," + rat_str(s.l1()) +
           "," + rat_str(s.l2()) + "," + B.get_str() + "," + r.count.get_str() + "," +
           r.raw_tuple_count.get_str() + "\n";
    return out;
}

std::string constants_report(const Setup& s, const Prediction& p, OutputFormat f) {
    if (f == OutputFormat::JSON) {
        ordered_json j;
        put_setup(j, s);
        j["a"] = rat_str(p.inv.a);
        j["b"] = p.inv.b;
        j["adjoint_d1"] = rat_str(p.inv.adjoint.d1);
        j["adjoint_d2"] = rat_str(p.inv.adjoint.d2);
        j["adjoint_type"] = adjoint_type_str(p.inv.adjoint_type);
        if (p.inv.e) j["e"] = rat_str(*p.inv.e);
        if (p.inv.alpha) j["alpha"] = rat_str(*p.inv.alpha);
        if (p.inv.delta) j["delta"] = rat_str(*p.inv.delta);
        j["supported"] = p.supported;
        if (p.omega) j["omega_inf"] = quad_json(*p.omega);
        if (p.euler != 0.0) j["euler_product"] = sig12(p.euler);
        if (p.fiber_sum) j["fiber_sum"] = sig12(*p.fiber_sum);
        if (p.truncation_M) j["truncation_M"] = *p.truncation_M;
        if (p.tail_bound) j["tail_bound"] = sig12(*p.tail_bound);
        j["c"] = sig12(p.c);
        return dump(j);
    }
    std::string out = "key,value\n";
    auto row = [&out](const std::string& k, const std::string& v) {
        out += k + "," + v + "\n";
    };
    row("family_n", std::to_string(s.n));
    row("boundary", boundary_str(s.boundary));
    row("l1", rat_str(s.l1()));
    row("l2", rat_str(s.l2()));
    row("a", rat_str(p.inv.a));
    row("b", std::to_string(p.inv.b));
    row("adjoint_d1", rat_str(p.inv.adjoint.d1));
    row("adjoint_d2", rat_str(p.inv.adjoint.d2));
    row("adjoint_type", adjoint_type_str(p.inv.adjoint_type));
    if (p.inv.e) row("e", rat_str(*p.inv.e));
    if (p.inv.alpha) row("alpha", rat_str(*p.inv.alpha));
    if (p.inv.delta) row("delta", rat_str(*p.inv.delta));
    row("supported", bool_str(p.supported));
    if (p.omega) {
        row("omega_value", real_str(sig12(p.omega->value)));
        row("omega_est_error", real_str(sig12(p.omega->est_error)));
        row("omega_method", method_str(p.omega->method));
        row("omega_cells_or_samples", std::to_string(p.omega->cells_or_samples));
        if (p.omega->seed) row("omega_seed", std::to_string(*p.omega->seed));
    }
    if (p.euler != 0.0) row("euler_product", real_str(sig12(p.euler)));
    if (p.fiber_sum) row("fiber_sum", real_str(sig12(*p.fiber_sum)));
    if (p.truncation_M) row("truncation_M", std::to_string(*p.truncation_M));
    if (p.tail_bound) row("tail_bound", real_str(sig12(*p.tail_bound)));
    row("c", real_str(sig12(p.c)));
    return out;
}

std::string compare_report(const Setup& s, const std::vector<CompareRow>& rows,
                           OutputFormat f) {
    if (f == OutputFormat::JSON) {
        ordered_json j;
        put_setup(j, s);
        ordered_json arr = ordered_json::array();
        for (const CompareRow& r : rows) {
            ordered_json e;
            e["B"] = int_ll(r.B);
            e["exact"] = int_ll(r.exact);
            e["predicted"] = sig12(r.predicted);
            e["ratio"] = sig12(r.ratio);
            e["supported"] = r.supported;
            arr.push_back(e);
        }
        j["rows"] = arr;
        return dump(j);
    }
    std::string out = "B,exact,predicted,ratio,supported\n";
    for (const CompareRow& r : rows)
        out += r.B.get_str() + "," + r.exact.get_str() + "," + real_str(sig12(r.predicted)) +
               "," + real_str(sig12(r.ratio)) + "," + bool_str(r.supported) + "\n";
    return out;
}

std::string fp_report(const std::vector<std::pair<std::string, LocalDensity>>& rows,
                      OutputFormat f) {
    if (f == OutputFormat::JSON) {
        ordered_json j;
        ordered_json arr = ordered_json::array();
        for (const auto& [b, d] : rows) {
            ordered_json e;
            e["p"] = d.p;
            e["boundary"] = b;
            e["x_count"] = int_ll(d.x_count);
            e["u_count"] = int_ll(d.u_count);
            e["lambda_exponent"] = d.lambda_exponent;
            e["omega"] = rat_str(d.omega);
            e["omega_real"] = sig12(rat_d(d.omega));
            arr.push_back(e);
        }
        j["rows"] = arr;
        return dump(j);
    }
    std::string out = "p,boundary,x_count,u_count,lambda_exponent,omega,omega_real\n";
    for (const auto& [b, d] : rows)
        out += std::to_string(d.p) + "," + b + "," + d.x_count.get_str() + "," +
               d.u_count.get_str() + "," + std::to_string(d.lambda_exponent) + "," +
               rat_str(d.omega) + "," + real_str(sig12(rat_d(d.omega))) + "\n";
    return out;
}

std::string fiber_rows_report(const Setup& s, const Int& B,
                              const std::vector<FiberRow>& rows, OutputFormat f) {
    if (f == OutputFormat::JSON) {
        ordered_json j;
        put_setup(j, s);
        j["B"] = int_ll(B);
        ordered_json arr = ordered_json::array();
        for (const FiberRow& r : rows) {
            ordered_json e;
            e["fiber"] = r.t.str();
            e["exact"] = int_ll(r.exact);
            e["predicted"] = sig12(r.predicted);
            e["ratio"] = sig12(r.ratio);
            arr.push_back(e);
        }
        j["rows"] = arr;
        return dump(j);
    }
    std::string out = "fiber,exact,predicted,ratio\n";
    for (const FiberRow& r : rows)
        out += r.t.str() + "," + r.exact.get_str() + "," + real_str(sig12(r.predicted)) +
               "," + real_str(sig12(r.ratio)) + "\n";
    return out;
}

} // namespace torcount
