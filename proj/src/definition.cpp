#include "cosep/definition.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cosep/error.hpp"

namespace cosep {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) fail(where + ": missing '" + key + "'");
    return obj.at(key);
}

std::vector<std::string> parse_labels(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where + ": basis must be a list of labels");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& x : j) {
        if (!x.is_string()) fail(where + ": basis labels must be strings");
        std::string s = x.get<std::string>();
        if (s.empty() || s.find('|') != std::string::npos) fail(where + ": invalid label '" + s + "'");
        if (!seen.insert(s).second) fail(where + ": duplicate label '" + s + "'");
        out.push_back(s);
    }
    return out;
}

std::size_t index_of(const std::vector<std::string>& labels, const std::string& s, const std::string& where) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return i;
    fail(where + ": unknown label '" + s + "'");
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& where) {
    if (!j.is_string()) fail(where + ": scalars must be strings");
    try {
        return f.parse(j.get<std::string>());
    } catch (const Error& e) {
        fail(where + ": " + e.what());
    }
}

// {label: "coef"} over a basis.
Vector parse_combination(const Field& f, const json& j, const std::vector<std::string>& labels,
                         const std::string& where) {
    if (!j.is_object()) fail(where + ": expected an object of label to coefficient");
    Vector v(labels.size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t k = index_of(labels, it.key(), where);
        v[k] = parse_scalar(f, it.value(), where);
    }
    return v;
}

// {"a|b": "coef"} over a tensor basis, left factor slowest.
Vector parse_tensor(const Field& f, const json& j, const std::vector<std::string>& left,
                    const std::vector<std::string>& right, const std::string& where) {
    if (!j.is_object()) fail(where + ": expected an object of tensor label to coefficient");
    Vector v(left.size() * right.size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        auto bar = key.find('|');
        if (bar == std::string::npos) fail(where + ": tensor label '" + key + "' needs the form a|b");
        std::size_t a = index_of(left, key.substr(0, bar), where);
        std::size_t b = index_of(right, key.substr(bar + 1), where);
        v[a * right.size() + b] = parse_scalar(f, it.value(), where);
    }
    return v;
}

// {source: image} where image is parsed by `image`; omitted sources map to zero.
template <typename ImageFn>
Matrix parse_map(const Field& f, const json& j, const std::vector<std::string>& src, std::size_t rows,
                 const std::string& where, ImageFn image) {
    if (!j.is_object()) fail(where + ": expected an object keyed by source basis labels");
    std::vector<Vector> cols(src.size(), Vector(rows));
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t s = index_of(src, it.key(), where);
        cols[s] = image(it.value(), where + "[" + it.key() + "]");
    }
    return Matrix::from_columns(f, rows, cols);
}

std::vector<Matrix> parse_actions(const Field& f, const json& parent, const char* key, const AlgebraPtr& alg,
                                  const std::vector<std::string>& basis, const std::string& where) {
    const std::size_t n = basis.size();
    std::vector<Matrix> out;
    const json* acts = parent.contains(key) ? &parent.at(key) : nullptr;
    if (acts && !acts->is_object()) fail(where + ": '" + key + "' must be an object keyed by algebra labels");
    if (acts) {
        for (auto it = acts->begin(); it != acts->end(); ++it) index_of(alg->labels(), it.key(), where + "." + key);
    }
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        const std::string& lab = alg->labels()[i];
        if (acts && acts->contains(lab)) {
            out.push_back(parse_map(f, acts->at(lab), basis, n, where + "." + key + "." + lab,
                                    [&](const json& img, const std::string& w) { return parse_combination(f, img, basis, w); }));
            continue;
        }
        Vector e(alg->dim());
        e[i] = 1;
        if (e != alg->unit()) fail(where + ": missing " + key + " action of '" + lab + "'");
        out.push_back(Matrix::identity(f, n));
    }
    return out;
}

AlgebraPtr parse_algebra(const Field& f, const json& j) {
    const std::string where = "algebra";
    auto labels = parse_labels(member(j, "basis", where), where);
    Vector unit = parse_combination(f, member(j, "unit", where), labels, where + ".unit");
    std::vector<std::vector<Vector>> mult(labels.size(), std::vector<Vector>(labels.size(), Vector(labels.size())));
    const json& m = member(j, "mult", where);
    if (!m.is_array()) fail(where + ".mult must be a list of [left, right, product]");
    for (const auto& entry : m) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() || !entry[1].is_string()) {
            fail(where + ".mult entries are [left, right, {label: coef}]");
        }
        std::size_t a = index_of(labels, entry[0].get<std::string>(), where + ".mult");
        std::size_t b = index_of(labels, entry[1].get<std::string>(), where + ".mult");
        mult[a][b] = parse_combination(f, entry[2], labels, where + ".mult");
    }
    return std::make_shared<const Algebra>(f, labels, mult, unit);
}

Bimodule parse_bimodule(const Field& f, const json& j, const AlgebraPtr& alg, const std::vector<std::string>& basis,
                        const std::string& where) {
    auto left = parse_actions(f, j, "left", alg, basis, where);
    auto right = parse_actions(f, j, "right", alg, basis, where);
    return Bimodule(alg, basis.size(), std::move(left), std::move(right));
}

Matrix parse_counit(const Field& f, const json& j, const AlgebraPtr& alg, const std::vector<std::string>& basis,
                    const std::string& where) {
    return parse_map(f, j, basis, alg->dim(), where, [&](const json& img, const std::string& w) {
        if (img.is_string()) {
            if (!alg->is_base_field()) fail(w + ": counit values need algebra coordinates");
            return Vector{parse_scalar(f, img, w)};
        }
        return parse_combination(f, img, alg->labels(), w);
    });
}

Coring parse_coring(const Field& f, const json& j, const AlgebraPtr& alg, std::vector<std::string>& labels,
                    const std::string& where) {
    labels = parse_labels(member(j, "basis", where), where);
    Bimodule c = parse_bimodule(f, j, alg, labels, where);
    Matrix delta = parse_map(f, member(j, "delta", where), labels, labels.size() * labels.size(), where + ".delta",
                             [&](const json& img, const std::string& w) { return parse_tensor(f, img, labels, labels, w); });
    Matrix eps = parse_counit(f, member(j, "counit", where), alg, labels, where + ".counit");
    try {
        return Coring(std::move(c), std::move(delta), std::move(eps));
    } catch (const Error& e) {
        fail(where + ": " + e.what());
    }
}

bool reserved_name(const std::string& n) { return n == "regular" || n == "zero" || n.rfind("induced:", 0) == 0; }

std::vector<NamedBicomodule> parse_bicomodules(const Field& f, const json& root, const Coring& c,
                                               const std::vector<std::string>& c_labels) {
    std::vector<NamedBicomodule> out;
    if (!root.contains("bicomodules")) return out;
    const json& list = root.at("bicomodules");
    if (!list.is_array()) fail("bicomodules must be a list");
    std::set<std::string> names;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const json& b = list[i];
        std::string where = "bicomodules[" + std::to_string(i) + "]";
        const json& nm = member(b, "name", where);
        if (!nm.is_string()) fail(where + ": name must be a string");
        std::string name = nm.get<std::string>();
        if (name.empty() || reserved_name(name)) fail(where + ": reserved or empty name '" + name + "'");
        if (!names.insert(name).second) fail(where + ": duplicate name '" + name + "'");
        where = "bicomodule '" + name + "'";
        auto labels = parse_labels(member(b, "basis", where), where);
        Bimodule m = parse_bimodule(f, b, c.algebra(), labels, where);
        Matrix rho = parse_map(f, member(b, "rho", where), labels, labels.size() * c.dim(), where + ".rho",
                               [&](const json& img, const std::string& w) { return parse_tensor(f, img, labels, c_labels, w); });
        Matrix lambda = parse_map(f, member(b, "lambda", where), labels, c.dim() * labels.size(), where + ".lambda",
                                  [&](const json& img, const std::string& w) { return parse_tensor(f, img, c_labels, labels, w); });
        out.push_back({make_bicomodule(c, name, std::move(m), rho, lambda), labels});
    }
    return out;
}

Field parse_field(const json& j) {
    const json& kind = member(j, "kind", "field");
    if (kind == "rationals") return Field::rationals();
    if (kind == "prime") {
        const json& p = member(j, "p", "field");
        if (!p.is_number_unsigned()) fail("field.p must be a positive integer");
        return Field::prime(p.get<std::uint64_t>());
    }
    fail("field.kind must be 'rationals' or 'prime'");
}

// ---- serialization ----

json combination_json(const Field& f, const Vector& v, const std::vector<std::string>& labels) {
    json o = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) o[labels[i]] = f.format(v[i]);
    return o;
}

json tensor_json(const Field& f, const Vector& v, const std::vector<std::string>& left,
                 const std::vector<std::string>& right) {
    json o = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) o[left[i / right.size()] + "|" + right[i % right.size()]] = f.format(v[i]);
    return o;
}

template <typename ImageFn>
json map_json(const Matrix& m, const std::vector<std::string>& src, ImageFn image) {
    json o = json::object();
    for (std::size_t s = 0; s < src.size(); ++s) {
        Vector col = m.column(s);
        if (!is_zero(col)) o[src[s]] = image(col);
    }
    return o;
}

json actions_json(const Field& f, const std::vector<Matrix>& acts, const Algebra& alg,
                  const std::vector<std::string>& basis) {
    json o = json::object();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        Vector e(alg.dim());
        e[i] = 1;
        if (e == alg.unit() && acts[i].is_identity()) continue;
        o[alg.labels()[i]] = map_json(acts[i], basis, [&](const Vector& v) { return combination_json(f, v, basis); });
    }
    return o;
}

void bimodule_json(json& out, const Bimodule& m, const std::vector<std::string>& basis) {
    const Field& f = m.field();
    json l = actions_json(f, m.left_actions(), *m.algebra(), basis);
    json r = actions_json(f, m.right_actions(), *m.algebra(), basis);
    if (!l.empty()) out["left"] = l;
    if (!r.empty()) out["right"] = r;
}

json counit_json(const Field& f, const Matrix& eps, const Algebra& alg, const std::vector<std::string>& basis) {
    return map_json(eps, basis, [&](const Vector& v) -> json {
        if (alg.is_base_field()) return f.format(v[0]);
        return combination_json(f, v, alg.labels());
    });
}

json coring_json(const Coring& c, const std::vector<std::string>& labels) {
    const Field& f = c.field();
    json o;
    o["basis"] = labels;
    bimodule_json(o, c.bimodule(), labels);
    o["delta"] = map_json(c.delta_input(), labels, [&](const Vector& v) { return tensor_json(f, v, labels, labels); });
    o["counit"] = counit_json(f, c.eps(), *c.algebra(), labels);
    return o;
}

json bicomodules_json(const Coring& c, const std::vector<std::string>& c_labels,
                      const std::vector<NamedBicomodule>& list) {
    json arr = json::array();
    const Field& f = c.field();
    for (const auto& nb : list) {
        const Bicomodule& b = nb.bicomodule;
        json o;
        o["name"] = b.name;
        o["basis"] = nb.labels;
        bimodule_json(o, b.module, nb.labels);
        Matrix rho = TensorChain::of({&b.module, &c.bimodule()}).represent(b.rho);
        Matrix lam = c.chain(1, b.module).represent(b.lambda);
        o["rho"] = map_json(rho, nb.labels, [&](const Vector& v) { return tensor_json(f, v, nb.labels, c_labels); });
        o["lambda"] = map_json(lam, nb.labels, [&](const Vector& v) { return tensor_json(f, v, c_labels, nb.labels); });
        arr.push_back(o);
    }
    return arr;
}

Bicomodule lookup(const Coring& c, const std::vector<NamedBicomodule>& list, const std::string& name) {
    if (name == "regular") return regular_bicomodule(c);
    if (name == "zero") return zero_bicomodule(c);
    if (name.rfind("induced:", 0) == 0) {
        Bicomodule inner = lookup(c, list, name.substr(8));
        return induced(c, inner.right());
    }
    for (const auto& nb : list)
        if (nb.bicomodule.name == name) return nb.bicomodule;
    fail("unknown bicomodule '" + name + "'");
}

}  // namespace

Definition parse_definition(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) fail("definition must be a JSON object");
    static const std::set<std::string> known = {"field", "algebra", "coring", "bicomodules", "coextension"};
    for (auto it = root.begin(); it != root.end(); ++it)
        if (!known.count(it.key())) fail("unknown top-level key '" + it.key() + "'");

    Definition d;
    d.field = parse_field(member(root, "field", "definition"));
    const bool has_coring = root.contains("coring"), has_coext = root.contains("coextension");
    if (has_coring == has_coext) fail("definition needs exactly one of 'coring' or 'coextension'");

    if (has_coring) {
        CoringDefinition cd;
        cd.explicit_algebra = root.contains("algebra");
        cd.algebra = cd.explicit_algebra ? parse_algebra(d.field, root.at("algebra")) : Algebra::base(d.field);
        cd.coring = parse_coring(d.field, root.at("coring"), cd.algebra, cd.labels, "coring");
        cd.bicomodules = parse_bicomodules(d.field, root, cd.coring, cd.labels);
        d.coring = std::move(cd);
        return d;
    }
    if (root.contains("algebra") || root.contains("bicomodules")) {
        fail("coextension files keep their bicomodules inside the 'coextension' block and have no algebra");
    }
    const json& cx = root.at("coextension");
    static const std::set<std::string> known_cx = {"A", "C", "phi", "bicomodules"};
    for (auto it = cx.begin(); it != cx.end(); ++it)
        if (!known_cx.count(it.key())) fail("unknown coextension key '" + it.key() + "'");
    auto k = Algebra::base(d.field);
    CoextensionDefinition ed;
    Coring a = parse_coring(d.field, member(cx, "A", "coextension"), k, ed.a_labels, "coextension.A");
    Coring c = parse_coring(d.field, member(cx, "C", "coextension"), k, ed.c_labels, "coextension.C");
    Matrix phi = parse_map(d.field, member(cx, "phi", "coextension"), ed.a_labels, ed.c_labels.size(), "coextension.phi",
                           [&](const json& img, const std::string& w) { return parse_combination(d.field, img, ed.c_labels, w); });
    ed.bicomodules = parse_bicomodules(d.field, cx, a, ed.a_labels);
    ed.ext = Coextension{std::move(a), std::move(c), std::move(phi)};
    d.coext = std::move(ed);
    return d;
}

Definition load_definition(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_definition(ss.str());
}

std::string serialize_definition(const Definition& d) {
    json root;
    json field;
    if (d.field.is_prime()) {
        field["kind"] = "prime";
        field["p"] = d.field.modulus();
    } else {
        field["kind"] = "rationals";
    }
    root["field"] = field;
    if (d.coring) {
        const CoringDefinition& cd = *d.coring;
        const Field& f = d.field;
        if (cd.explicit_algebra) {
            const Algebra& a = *cd.algebra;
            json alg;
            alg["basis"] = a.labels();
            alg["unit"] = combination_json(f, a.unit(), a.labels());
            json mult = json::array();
            for (std::size_t i = 0; i < a.dim(); ++i)
                for (std::size_t j = 0; j < a.dim(); ++j)
                    if (!is_zero(a.product(i, j)))
                        mult.push_back({a.labels()[i], a.labels()[j], combination_json(f, a.product(i, j), a.labels())});
            alg["mult"] = mult;
            root["algebra"] = alg;
        }
        root["coring"] = coring_json(cd.coring, cd.labels);
        if (!cd.bicomodules.empty()) root["bicomodules"] = bicomodules_json(cd.coring, cd.labels, cd.bicomodules);
    }
    if (d.coext) {
        const CoextensionDefinition& ed = *d.coext;
        json cx;
        cx["A"] = coring_json(ed.ext.a, ed.a_labels);
        cx["C"] = coring_json(ed.ext.c, ed.c_labels);
        cx["phi"] = map_json(ed.ext.phi, ed.a_labels, [&](const Vector& v) { return combination_json(d.field, v, ed.c_labels); });
        if (!ed.bicomodules.empty()) cx["bicomodules"] = bicomodules_json(ed.ext.a, ed.a_labels, ed.bicomodules);
        root["coextension"] = cx;
    }
    return root.dump(2) + "\n";
}

Bicomodule find_bicomodule(const CoringDefinition& d, const std::string& name) {
    return lookup(d.coring, d.bicomodules, name);
}

Bicomodule find_bicomodule(const CoextensionDefinition& d, const std::string& name) {
    return lookup(d.ext.a, d.bicomodules, name);
}

}  // namespace cosep
