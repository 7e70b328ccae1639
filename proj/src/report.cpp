#include "cosep/report.hpp"

#include <cstdio>
#include <sstream>

#include "cosep/cointegration.hpp"
#include "cosep/definition.hpp"
#include "cosep/error.hpp"

namespace cosep {

using nlohmann::json;

namespace {

struct WrongKind : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationFailed {
    json details;
};

json solution_json(const Field& f, const MapSolution& s) {
    json j;
    j["found"] = s.found();
    if (s.map) j["witness"] = to_json(f, *s.map);
    if (s.certificate) j["certificate"] = to_json(f, *s.certificate);
    return j;
}

std::vector<Bicomodule> all_bicomodules(const CoringDefinition& d) {
    std::vector<Bicomodule> out = {regular_bicomodule(d.coring), zero_bicomodule(d.coring)};
    for (const auto& nb : d.bicomodules) out.push_back(nb.bicomodule);
    return out;
}

std::vector<Bicomodule> all_bicomodules(const CoextensionDefinition& d) {
    std::vector<Bicomodule> out = {regular_bicomodule(d.ext.a), zero_bicomodule(d.ext.a)};
    for (const auto& nb : d.bicomodules) out.push_back(nb.bicomodule);
    return out;
}

json validate_coring(const CoringDefinition& d) {
    json j;
    j["kind"] = "coring";
    j["coring"] = to_json(check_coring(d.coring));
    json bs = json::array();
    for (const auto& nb : d.bicomodules) {
        json b = to_json(check_bicomodule(d.coring, nb.bicomodule));
        b["name"] = nb.bicomodule.name;
        bs.push_back(b);
    }
    j["bicomodules"] = bs;
    bool ok = j["coring"]["passed"].get<bool>();
    for (const auto& b : bs) ok = ok && b["passed"].get<bool>();
    j["passed"] = ok;
    return j;
}

json validate_coext(const CoextensionDefinition& d) {
    json j;
    j["kind"] = "coextension";
    j["coextension"] = to_json(check_coextension(d.ext));
    bool ok = j["coextension"]["passed"].get<bool>();
    if (ok) {
        j["delta_bar"] = to_json(delta_bar_residuals(d.ext));
        ok = j["delta_bar"]["passed"].get<bool>();
    }
    json bs = json::array();
    for (const auto& nb : d.bicomodules) {
        json b = to_json(check_bicomodule(d.ext.a, nb.bicomodule));
        b["name"] = nb.bicomodule.name;
        ok = ok && b["passed"].get<bool>();
        bs.push_back(b);
    }
    j["bicomodules"] = bs;
    j["passed"] = ok;
    return j;
}

const CoringDefinition& need_coring(const Definition& d) {
    if (!d.coring) throw WrongKind("this command needs a coring definition");
    return *d.coring;
}

json cmd_cosep(const CoringDefinition& d) {
    const Coring& c = d.coring;
    const Field& f = c.field();
    Bicomodule reg = regular_bicomodule(c);
    MapSolution split = cosep_witness(c);
    UniversalCointegration uw = universal_cointegration(c, reg);
    UniversalCoderivation ud = universal_coderivation(c);
    bool w_inner = is_inner_coint(c, uw.k.module, reg, uw.w).found();
    bool d_inner = is_inner_coder(c, ud.k.module, ud.d).found();
    json j;
    j["coseparable"] = split.found();
    j["splitting"] = solution_json(f, split);
    j["trichotomy"] = {{"split", split.found()},
                       {"w_inner", w_inner},
                       {"d_inner", d_inner},
                       {"agree", split.found() == w_inner && w_inner == d_inner}};
    j["regular_relatively_injective"] = relative_injective(c, reg).found();
    return j;
}

json spaces_coring(const CoringDefinition& d, const CommandRequest& req) {
    const Coring& c = d.coring;
    Bicomodule n = find_bicomodule(d, req.n), m = find_bicomodule(d, req.m);
    Bicomodule reg = regular_bicomodule(c);
    json j;
    j["n"] = n.name;
    j["m"] = m.name;
    std::size_t coder = coder_space(c, m).dim(), icoder = inner_coder_space(c, m).dim();
    std::size_t coint = coint_space(c, n, m).dim(), icoint = inner_coint_space(c, n, m).dim();
    std::size_t coint_reg = coint_space(c, m, reg).dim(), icoint_reg = inner_coint_space(c, m, reg).dim();
    j["coder"] = coder;
    j["inner_coder"] = icoder;
    j["coint"] = coint;
    j["inner_coint"] = icoint;
    j["coint_m_regular"] = coint_reg;
    j["inner_coint_m_regular"] = icoint_reg;
    j["correspondence_holds"] = coder == coint_reg && icoder == icoint_reg;
    return j;
}

json spaces_coext(const CoextensionDefinition& d, const CommandRequest& req) {
    const Coextension& e = d.ext;
    Bicomodule n = find_bicomodule(d, req.n), m = find_bicomodule(d, req.m);
    Bicomodule reg = regular_bicomodule(e.a);
    json j;
    j["n"] = n.name;
    j["m"] = m.name;
    std::size_t coder = c_coder_space(e, m).dim(), icoder = c_inner_coder_space(e, m).dim();
    std::size_t coint_reg = c_coint_space(e, m, reg).dim(), icoint_reg = c_inner_coint_space(e, m, reg).dim();
    j["coder"] = coder;
    j["inner_coder"] = icoder;
    j["coint"] = c_coint_space(e, n, m).dim();
    j["inner_coint"] = c_inner_coint_space(e, n, m).dim();
    j["coint_m_regular"] = coint_reg;
    j["inner_coint_m_regular"] = icoint_reg;
    j["correspondence_holds"] = coder == coint_reg && icoder == icoint_reg;
    return j;
}

json cmd_ext(const CoringDefinition& d, const CommandRequest& req) {
    const Coring& c = d.coring;
    Bicomodule n = find_bicomodule(d, req.n), m = find_bicomodule(d, req.m);
    auto ext = ext_dims(c, n, m, req.max_degree, req.budget);
    auto h = h_dims(c, n, m, req.max_degree, req.budget);
    json shifts = json::array();
    for (std::size_t k = 1; k + 1 <= req.max_degree; ++k)
        shifts.push_back({{"degree", k}, {"holds", ext[k + 1] == h[k]}});
    return {{"n", n.name}, {"m", m.name}, {"max_degree", req.max_degree}, {"ext", ext}, {"h", h}, {"shift", shifts}};
}

json cmd_universal(const CoringDefinition& d, const CommandRequest& req) {
    const Coring& c = d.coring;
    const Field& f = c.field();
    Bicomodule m = find_bicomodule(d, req.m);
    UniversalCointegration uw = universal_cointegration(c, m);
    UniversalCoderivation ud = universal_coderivation(c);
    json j;
    j["m"] = m.name;
    j["cointegration"] = {{"k_dim", uw.k.module.dim()},
                          {"w", to_json(f, uw.w)},
                          {"inner", solution_json(f, is_inner_coint(c, uw.k.module, m, uw.w))}};
    j["coderivation"] = {{"k_dim", ud.k.module.dim()},
                         {"d", to_json(f, ud.d)},
                         {"inner", solution_json(f, is_inner_coder(c, ud.k.module, ud.d))}};
    return j;
}

json cmd_battery(const CoringDefinition& d, const CommandRequest& req) {
    const Coring& c = d.coring;
    auto ms = all_bicomodules(d);
    Bicomodule reg = regular_bicomodule(c);
    UniversalCoderivation ud = universal_coderivation(c);

    bool coders = true, coints = true, ext_zero = true, h_zero = true;
    for (const auto& m : ms) {
        coders = coders && coder_space(c, m).dim() == inner_coder_space(c, m).dim();
        for (const auto& n : ms) {
            coints = coints && coint_space(c, n, m).dim() == inner_coint_space(c, n, m).dim();
            auto e = ext_dims(c, n, m, 2, req.budget);
            ext_zero = ext_zero && e[1] == 0 && e[2] == 0;
            h_zero = h_zero && h_dims(c, n, m, 1, req.budget)[1] == 0;
        }
    }
    json p;
    p["split_delta"] = cosep_witness(c).found();
    p["regular_relatively_injective"] = relative_injective(c, reg).found();
    p["universal_d_inner"] = is_inner_coder(c, ud.k.module, ud.d).found();
    p["coderivations_inner"] = coders;
    p["cointegrations_inner"] = coints;
    p["ext_vanishes"] = ext_zero;
    p["h_vanishes"] = h_zero;
    bool first = p["split_delta"].get<bool>(), same = true;
    for (const auto& [k, v] : p.items()) same = same && v.get<bool>() == first;

    json per = json::array();
    for (const auto& m : ms) {
        UniversalCointegration uw = universal_cointegration(c, m);
        bool inj = relative_injective(c, m).found();
        bool w_inner = is_inner_coint(c, uw.k.module, m, uw.w).found();
        bool all_inner = coint_space(c, uw.k.module, m).dim() == inner_coint_space(c, uw.k.module, m).dim();
        bool induced_inj = relative_injective(c, induced(c, m.right())).found();
        per.push_back({{"name", m.name},
                       {"relatively_injective", inj},
                       {"universal_w_inner", w_inner},
                       {"cointegrations_from_k_inner", all_inner},
                       {"coherent", inj == w_inner && w_inner == all_inner},
                       {"induced_relatively_injective", induced_inj}});
    }
    return {{"predicates", p}, {"all_equal", same}, {"common_value", first}, {"bicomodules", per}};
}

json cmd_coext(const CoextensionDefinition& d) {
    const Coextension& e = d.ext;
    const Field& f = e.a.field();
    json j;
    Matrix lam_c = corestrict_left(e, e.a.dim(), e.a.delta());
    MapSolution flat = coflat_check(e.c, e.a.dim(), lam_c);
    j["coflat"] = flat.found();
    j["delta_bar"] = to_json(delta_bar_residuals(e));
    j["cotensor_dim"] = delta_bar(e).d.dim();
    if (!flat.found()) {
        j["separable"] = nullptr;
        j["hypothesis_met"] = false;
        return j;
    }
    MapSolution sep = separable_coext(e);
    j["hypothesis_met"] = true;
    j["separable"] = sep.found();
    j["splitting"] = solution_json(f, sep);

    auto ms = all_bicomodules(d);
    bool coder_zero = true, coint_zero = true;
    for (const auto& m : ms) {
        if (!coflat_check(e.c, m.dim(), corestrict_left(e, m.dim(), m.lambda)).found()) continue;
        coder_zero = coder_zero && c_coder_space(e, m).dim() == c_inner_coder_space(e, m).dim();
        for (const auto& n : ms)
            coint_zero = coint_zero && c_coint_space(e, n, m).dim() == c_inner_coint_space(e, n, m).dim();
    }
    j["coderivation_quotients_zero"] = coder_zero;
    j["cointegration_quotients_zero"] = coint_zero;
    j["coherent"] = sep.found() == coder_zero && coder_zero == coint_zero;
    return j;
}

json dispatch(const CommandRequest& req, const Definition& def) {
    const std::string& cmd = req.command;
    if (cmd == "validate") return def.coring ? validate_coring(*def.coring) : validate_coext(*def.coext);

    json v = def.coring ? validate_coring(*def.coring) : validate_coext(*def.coext);
    if (!v["passed"].get<bool>()) throw ValidationFailed{v};

    if (cmd == "cosep") return cmd_cosep(need_coring(def));
    if (cmd == "spaces") return def.coring ? spaces_coring(*def.coring, req) : spaces_coext(*def.coext, req);
    if (cmd == "ext") return cmd_ext(need_coring(def), req);
    if (cmd == "universal") return cmd_universal(need_coring(def), req);
    if (cmd == "battery") return cmd_battery(need_coring(def), req);
    if (cmd == "coext") {
        if (!def.coext) throw WrongKind("this command needs a coextension definition");
        return cmd_coext(*def.coext);
    }
    throw WrongKind("unknown command '" + cmd + "'");
}

ExitCode exit_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return ExitCode::Parse;
        case ErrorCode::BudgetExceeded: return ExitCode::Budget;
        case ErrorCode::InvalidAlgebra:
        case ErrorCode::InvalidBimodule:
        case ErrorCode::InvalidCoring:
        case ErrorCode::InvalidBicomodule:
        case ErrorCode::InvalidComodule:
        case ErrorCode::NotCorestrictable:
        case ErrorCode::NoFactorization:
        case ErrorCode::HypothesisNotMet: return ExitCode::Validation;
        default: return ExitCode::Internal;
    }
}

void render_human(std::ostream& out, const json& j, int indent) {
    const std::string pad(indent * 2, ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto is_flat = [](const json& a) {
        for (const auto& x : a)
            if (x.is_structured()) return false;
        return true;
    };
    for (const auto& [key, v] : j.items()) {
        if (v.is_object()) {
            out << pad << key << ":\n";
            render_human(out, v, indent + 1);
        } else if (v.is_array() && is_flat(v)) {
            out << pad << key << ": [";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
            out << "]\n";
        } else if (v.is_array()) {
            out << pad << key << ":\n";
            for (const auto& x : v) {
                if (x.is_object()) {
                    out << pad << "  -\n";
                    render_human(out, x, indent + 2);
                } else {
                    out << pad << "  [";
                    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << scalar(x[i]);
                    out << "]\n";
                }
            }
        } else {
            out << pad << key << ": " << scalar(v) << "\n";
        }
    }
}

}  // namespace

json to_json(const Field& f, const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (const auto& x : m.dense_row(i)) r.push_back(f.format(x));
        rows.push_back(r);
    }
    return rows;
}

json to_json(const Field& f, const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(f.format(x));
    return out;
}

json to_json(const CheckReport& r) {
    json fails = json::array();
    for (const auto& x : r.failures) fails.push_back({{"axiom", x.axiom}, {"location", x.location}});
    return {{"passed", r.passed()}, {"degenerate", r.degenerate}, {"failures", fails}};
}

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CommandResult run_command(const CommandRequest& req, std::string_view text) {
    CommandResult res;
    json& r = res.report;
    r["schema_version"] = kReportSchemaVersion;
    r["command"] = {{"name", req.command}, {"file", req.path},           {"n", req.n},
                    {"m", req.m},          {"max_degree", req.max_degree}, {"budget", req.budget}};
    r["input_digest"] = "fnv1a64:" + fnv1a64(text);
    auto fail = [&](ExitCode code, const std::string& kind, const std::string& msg) {
        res.exit = code;
        r["status"] = "error";
        r["error"] = {{"kind", kind}, {"message", msg}};
    };
    try {
        Definition def = parse_definition(text);
        r["result"] = dispatch(req, def);
        r["status"] = "ok";
        if (req.command == "validate" && !r["result"]["passed"].get<bool>()) {
            res.exit = ExitCode::Validation;
            r["status"] = "invalid";
        }
    } catch (const ValidationFailed& v) {
        res.exit = ExitCode::Validation;
        r["status"] = "invalid";
        r["result"] = v.details;
    } catch (const WrongKind& e) {
        fail(ExitCode::Parse, "usage", e.what());
    } catch (const Error& e) {
        fail(exit_for(e.code()), std::string(error_code_name(e.code())), e.what());
    } catch (const std::exception& e) {
        fail(ExitCode::Internal, "internal", e.what());
    }
    return res;
}

std::string render(const json& report, Format format) {
    if (format == Format::Json) return report.dump(2) + "\n";
    std::ostringstream out;
    render_human(out, report, 0);
    return out.str();
}

}  // namespace cosep
