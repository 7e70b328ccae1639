// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion]
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cosep/coextension.hpp"
#include "cosep/error.hpp"
#include "cosep/cohomology.hpp"
#include "cosep/cointegration.hpp"
#include "cosep/linalg.hpp"
#include "cosep/report.hpp"
#include "support/corpus.hpp"
#include "support/random_bicomodule.hpp"
#include "support/witness.hpp"

using namespace cosep;
using namespace cosep::testing;

namespace {

struct Tally {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

bool certificate_checks(const Coring& c, const MapSolution& s) {
    if (!s.certificate) return false;
    Bicomodule reg = regular_bicomodule(c);
    Bicomodule ind = induced(c, reg.right());
    MapOperator split(c.field(), c.dim(), ind.dim(), c.dim(), c.dim());
    split.add(Matrix::identity(c.field(), c.dim()), c.delta());
    auto [a, b] = stack_affine(hom_constraints(c, ind, reg, HomKind::Full), split, Matrix::identity(c.field(), c.dim()));
    return verify_certificate(a, b, *s.certificate);
}

void verdicts(Tally& t) {
    for (const char* name : {"trivial", "grouplike2", "comatrix2", "sweedler_gauss"}) {
        auto d = load_coring(name);
        MapSolution s = cosep_witness(d.coring);
        t.expect(s.found() && is_splitting_witness(d.coring, *s.map), std::string(name) + " should be coseparable");
    }
    auto g = load_coring("grouplike2");
    t.expect(is_splitting_witness(g.coring, grouplike_witness(g.coring)), "grouplike2 hand witness rejected");

    auto gauss = load_coring("sweedler_gauss");
    t.expect(sweedler_witness_well_defined(gauss.coring) &&
                 is_splitting_witness(gauss.coring, sweedler_witness(gauss.coring)),
             "sweedler_gauss hand witness rejected");

    auto dp = load_coring("divpow2");
    MapSolution sd = cosep_witness(dp.coring);
    t.expect(!sd.found() && certificate_checks(dp.coring, sd), "divpow2 should be non-coseparable with a certificate");

    auto x2 = load_coring("sweedler_x2");
    MapSolution sx = cosep_witness(x2.coring);
    bool hand = sweedler_witness_well_defined(x2.coring) && is_splitting_witness(x2.coring, sweedler_witness(x2.coring));
    t.expect(!sx.found() && certificate_checks(x2.coring, sx),
             std::string("sweedler_x2 expected non-coseparable, but the solver found a witness") +
                 (hand ? " and the hand witness E(bc) a(x)d also splits Delta" : ""));
}

void divpow_pair(Tally& t) {
    auto d = load_coring("divpow2");
    const Coring& c = d.coring;
    Bicomodule reg = regular_bicomodule(c);
    std::size_t coder = coder_space(c, reg).dim(), icoder = inner_coder_space(c, reg).dim();
    std::size_t coint = coint_space(c, reg, reg).dim(), icoint = inner_coint_space(c, reg, reg).dim();
    t.expect(coder == 1, "dim Coder = " + std::to_string(coder));
    t.expect(icoder == 0, "dim InCoder = " + std::to_string(icoder));
    t.expect(coint == 1, "dim Coint = " + std::to_string(coint));
    t.expect(icoint == 0, "dim InCoint = " + std::to_string(icoint));
    t.expect(coint - icoint == 1, "Ext^1 from cointegrations != 1");
    t.expect(ext_dims(c, reg, reg, 1)[1] == 1, "Ext^1 from the complex != 1");
}

void correspondence_one(Tally& t, const Coring& c, const Bicomodule& m, const std::string& label) {
    Bicomodule reg = regular_bicomodule(c);
    MapSpace g = coder_space(c, m);
    MapSpace h = coint_space(c, m, reg);
    t.expect(g.dim() == h.dim(), label + ": dim Coder != dim Coint");
    for (const auto& b : g.basis_maps()) {
        Matrix back = coder_to_coint(c, m, b);
        t.expect(h.contains(back) && coint_to_coder(c, m, back) == b, label + ": coderivation round trip");
    }
    for (const auto& b : h.basis_maps()) {
        Matrix fwd = coint_to_coder(c, m, b);
        t.expect(g.contains(fwd) && coder_to_coint(c, m, fwd) == b, label + ": cointegration round trip");
    }
}

void correspondence(Tally& t) {
    for (const auto& name : coring_corpus()) {
        auto d = load_coring(name);
        for (const auto& m : corpus_bicomodules(d)) correspondence_one(t, d.coring, m, name + "/" + m.name);
    }
    RandomBicomoduleSource src(20260915);
    for (int i = 0; i < 100; ++i) {
        auto [ci, m] = src.next();
        const Coring& c = src.corings[ci].coring;
        std::string label = "random #" + std::to_string(i);
        t.expect(check_bicomodule(c, m).passed() && m.dim() >= 1 && m.dim() <= 4, label + ": generator produced invalid input");
        correspondence_one(t, c, m, label);
    }
}

void battery(Tally& t) {
    for (const auto& name : coring_corpus()) {
        CommandRequest req{"battery", name};
        CommandResult r = run_command(req, [&] {
            std::ifstream in(corpus_path(name));
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }());
        bool ok = r.exit == ExitCode::Completed && r.report["result"]["all_equal"] == true;
        t.expect(ok, name + ": predicate vector not constant");
    }
}

void complex_identities(Tally& t) {
    for (const auto& name : coring_corpus()) {
        auto d = load_coring(name);
        auto ms = corpus_bicomodules(d);
        for (const auto& m : ms) {
            auto s = resolution(d.coring, m, 3);
            std::string label = name + "/" + m.name;
            t.expect(s.composites_vanish(), label + ": resolution composite nonzero");
            t.expect(s.homotopy_holds(), label + ": contracting homotopy fails");
            t.expect(s.forgotten_exact(), label + ": forgotten resolution not exact");
            for (const auto& n : ms)
                t.expect(cochain_complex(d.coring, n, m, 3).squares_vanish(), n.name + "->" + label + ": d d != 0");
        }
    }
}

void shifts(Tally& t) {
    for (const auto& name : coring_corpus()) {
        auto d = load_coring(name);
        auto ms = corpus_bicomodules(d);
        for (const auto& n : ms)
            for (const auto& m : ms) {
                std::string label = name + "/" + n.name + "," + m.name;
                auto ext = ext_dims(d.coring, n, m, 3);
                UniversalCointegration u = universal_cointegration(d.coring, m);
                auto ext_k = ext_dims(d.coring, n, u.k.module, 2);
                auto h = h_dims(d.coring, n, m, 2);
                for (std::size_t k = 1; k <= 2; ++k) {
                    t.expect(ext[k + 1] == ext_k[k], label + ": Ext^{k+1}(N,M) != Ext^k(N,K(M)), k=" + std::to_string(k));
                    t.expect(h[k] == ext_k[k], label + ": H^k != Ext^k(N,K(M)), k=" + std::to_string(k));
                }
            }
    }
}

void coherence(Tally& t) {
    for (const auto& name : coring_corpus()) {
        auto d = load_coring(name);
        const Coring& c = d.coring;
        for (const auto& m : corpus_bicomodules(d)) {
            std::string label = name + "/" + m.name;
            UniversalCointegration u = universal_cointegration(c, m);
            bool inj = relative_injective(c, m).found();
            bool w_inner = is_inner_coint(c, u.k.module, m, u.w).found();
            bool all_inner = true;
            for (const auto& h : coint_space(c, u.k.module, m).basis_maps())
                all_inner = all_inner && is_inner_coint(c, u.k.module, m, h).found();
            t.expect(inj == w_inner && w_inner == all_inner, label + ": injectivity, inner w and all-inner verdicts disagree");
            t.expect(relative_injective(c, induced(c, m.right())).found(), label + ": induced not relatively injective");
        }
    }
}

void maschke(Tally& t) {
    std::size_t split = 0;
    for (const auto& name : coring_corpus()) {
        auto d = load_coring(name);
        MapSolution s = cosep_witness(d.coring);
        if (!s.found()) continue;
        ++split;
        for (const auto& m : corpus_bicomodules(d)) {
            Matrix u = maschke_retraction(d.coring, *s.map, m);
            std::string label = name + "/" + m.name;
            t.expect((u * m.lambda).is_identity(), label + ": upsilon lambda != id");
            t.expect(is_morphism(d.coring, induced(d.coring, m.right()), m, u), label + ": upsilon not a morphism");
        }
    }
    t.expect(split >= 4, "fewer than four coseparable corpus corings");
}

void coextensions(Tally& t) {
    for (const auto& name : coext_corpus()) {
        auto d = load_coext(name);
        if (check_coextension(d.ext).passed())
            t.expect(delta_bar_residuals(d.ext).passed(), name + ": Delta_bar residuals nonzero");
        if (d.ext.c.dim() != 1) continue;
        const Coring& a = d.ext.a;
        t.expect(separable_coext(d.ext).found() == cosep_witness(a).found(), name + ": C = k verdict differs");
        std::vector<Bicomodule> ms = {regular_bicomodule(a), zero_bicomodule(a)};
        for (const auto& nb : d.bicomodules) ms.push_back(nb.bicomodule);
        for (const auto& m : ms) {
            t.expect(c_coder_space(d.ext, m).dim() == coder_space(a, m).dim(), name + "/" + m.name + ": coder dims");
            t.expect(c_inner_coder_space(d.ext, m).dim() == inner_coder_space(a, m).dim(), name + "/" + m.name + ": inner coder dims");
            for (const auto& n : ms) {
                t.expect(c_coint_space(d.ext, n, m).dim() == coint_space(a, n, m).dim(), name + ": coint dims");
                t.expect(c_inner_coint_space(d.ext, n, m).dim() == inner_coint_space(a, n, m).dim(), name + ": inner coint dims");
            }
        }
    }
    t.expect(separable_coext(load_coext("coext_identity").ext).found(), "phi = id not separable");

    auto g = load_coext("coext_grouplike");
    MapSolution sg = separable_coext(g.ext);
    bool verified = false;
    if (sg.found()) {
        DeltaBar db = delta_bar(g.ext);
        verified = (*sg.map * db.delta_bar).is_identity() &&
                   is_morphism(g.ext.a, db.bicomodule, regular_bicomodule(g.ext.a), *sg.map);
    }
    t.expect(verified, "grouplike2 -> grouplike1 witness missing or rejected");
    t.expect(!separable_coext(load_coext("coext_divpow_base").ext).found(), "divpow2 over k separable");
    bool refused = false;
    try {
        separable_coext(load_coext("coext_divpow_inclusion").ext);
    } catch (const cosep::Error& e) {
        refused = e.code() == ErrorCode::HypothesisNotMet;
    }
    t.expect(refused, "non-coflat coextension not refused");
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(COSEP_CLI_PATH) + " " + args + " 2>&1";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return "popen failed";
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return out + "\nstatus " + std::to_string(status);
}

void determinism(Tally& t) {
    std::vector<std::string> suite;
    for (const auto& name : coring_corpus())
        for (const char* cmd : {"validate", "cosep", "spaces", "ext", "universal", "battery"})
            suite.push_back(std::string(cmd) + " " + corpus_path(name) + " --format json");
    for (const auto& name : coext_corpus())
        for (const char* cmd : {"validate", "spaces", "coext"})
            suite.push_back(std::string(cmd) + " " + corpus_path(name) + " --format json");
    std::string first, second;
    for (const auto& s : suite) first += run_cli(s);
    for (const auto& s : suite) second += run_cli(s);
    t.expect(first.find("schema_version") != std::string::npos, "CLI produced no reports");
    t.expect(first == second, "CLI reports differ between runs");
}

struct Criterion {
    const char* title;
    std::function<void(Tally&)> run;
};

const std::vector<Criterion> kCriteria = {
    {"coseparability verdict table", verdicts},
    {"divpow2 regular pair dimensions", divpow_pair},
    {"coderivation/cointegration correspondence, corpus and 100 random F5 bicomodules", correspondence},
    {"equivalent predicates constant per coring", battery},
    {"complex and resolution identities up to degree 3", complex_identities},
    {"shift isomorphisms for n = 1, 2", shifts},
    {"relative injectivity coherence and induced bicomodules", coherence},
    {"Maschke retraction", maschke},
    {"coextensions", coextensions},
    {"deterministic CLI reports", determinism},
};

}  // namespace

int main(int argc, char** argv) {
    std::size_t only = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 0;
    bool all_ok = true;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) {
        if (only && only != i + 1) continue;
        Tally t;
        std::string error;
        try {
            kCriteria[i].run(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        bool ok = t.failures.empty() && error.empty();
        all_ok = all_ok && ok;
        std::cout << "criterion " << (i + 1) << " " << (ok ? "PASS" : "FAIL") << ": " << kCriteria[i].title << " ("
                  << t.checks << " checks";
        if (!error.empty()) std::cout << "; threw " << error;
        if (!t.failures.empty()) std::cout << "; " << t.failures.size() << " failed, first: " << t.failures.front();
        std::cout << ")" << std::endl;
    }
    return all_ok ? 0 : 1;
}
