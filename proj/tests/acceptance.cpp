// One PASS/FAIL line per acceptance criterion. Exit status 1 if any criterion fails.

#include "oracle.hpp"

#include "thl/commands.hpp"
#include "thl/config.hpp"
#include "thl/crossed.hpp"
#include "thl/fixtures.hpp"
#include "thl/report.hpp"
#include "thl/sequences.hpp"
#include "thl/twisted.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace thl;

namespace {

using Dims = std::vector<std::size_t>;

std::string show(const Dims& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

Dims scaled(Dims d, std::size_t k) {
    for (auto& x : d) x *= k;
    return d;
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome operator_identities() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::size_t count = 0;
    for (const char* name : {"trunc-poly-z2", "q3-z3-shift"}) {
        const Fixture& f = find_fixture(name);
        for (const IdentityCheck& c : verify_gj_identities(f.algebra, f.group, 4)) {
            ++count;
            o.require(c.pass, std::string(name) + " " + c.name + " at " + c.location + ": " + c.detail);
        }
    }
    double s = seconds_since(t0);
    o.require(s <= 60.0, "runtime " + std::to_string(s) + " s");
    if (o.pass) o.detail << count << " identities, " << s << " s";
    return o;
}

Outcome baseline() {
    Outcome o;
    Algebra Q = find_fixture("ground-field").algebra;
    FiniteGroupAction G = trivial_group(Q);
    const Dims expected{1, 0, 1, 0};
    Dims hk = twisted_cyclic(Q, identity_map(Q), 3).dims;
    Dims prop = proposition_bicomplex(Q, G, 3).homology.dims;
    Dims lambda = connes_lambda_complex(Q, G, 3, true).homology.dims;
    Dims dense = oracle::connes_cyclic_dims(oracle::dense_algebra(Q, identity_map(Q)), 3);
    o.require(hk == expected, "HK " + show(hk));
    o.require(prop == expected, "proposition " + show(prop));
    o.require(lambda == expected, "lambda " + show(lambda));
    o.require(dense == expected, "dense oracle " + show(dense));
    if (o.pass) o.detail << "all pipelines " << show(expected);
    return o;
}

Outcome proposition() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (const char* name : {"trunc-poly-z2", "q3-z3-shift"}) {
        const Fixture& f = find_fixture(name);
        Algebra AG = crossed_product(f.algebra, f.group);
        Dims oracle_dims = twisted_cyclic(AG, identity_map(AG), 3).dims;
        Dims prop = proposition_bicomplex(f.algebra, f.group, 3).homology.dims;
        Dims coinv = coinvariant_bicomplex(f.algebra, f.group, 3).dims;
        o.require(prop == oracle_dims && coinv == oracle_dims,
                  std::string(name) + ": proposition " + show(prop) + ", coinvariant " + show(coinv) + ", oracle " +
                      show(oracle_dims));
        if (o.pass) o.detail << name << " " << show(oracle_dims) << " ";
    }
    // Independent dense Connes complex of the crossed product, where it is small enough.
    const Fixture& f = find_fixture("trunc-poly-z2");
    Algebra AG = crossed_product(f.algebra, f.group);
    Dims dense = oracle::connes_cyclic_dims(oracle::dense_algebra(AG, identity_map(AG)), 2);
    Dims prop = proposition_bicomplex(f.algebra, f.group, 2).homology.dims;
    o.require(dense == prop, "dense oracle " + show(dense) + " vs " + show(prop));
    double s = seconds_since(t0);
    o.require(s <= 300.0, "runtime " + std::to_string(s) + " s");
    return o;
}

Outcome theorem() {
    Outcome o;
    struct Case {
        const char* fixture;
        std::size_t twist;
    };
    for (Case c : {Case{"trunc-poly-z2", 1}, Case{"q3-z3-shift", 1}}) {
        const Fixture& f = find_fixture(c.fixture);
        const std::size_t r = f.group.order;
        Algebra AG = crossed_product(f.algebra, f.group);
        Dims hc = twisted_cyclic(AG, identity_map(AG), 3).dims;
        Dims hcg = twisted_cyclic(f.algebra, f.group.action[c.twist], 3).dims;
        o.require(hc == scaled(hcg, r), std::string(c.fixture) + ": HC(A x| G) " + show(hc) + " vs " +
                                            std::to_string(r) + " x HC^g " + show(hcg));
        TheoremMapReport t = theorem_map_f(f.algebra, f.group, c.twist, 3);
        for (std::size_t n = 0; n <= 3; ++n) {
            o.require(t.injective[n], std::string(c.fixture) + ": f not injective at n=" + std::to_string(n));
            o.require(t.within_stalk[n] && t.onto_stalk[n],
                      std::string(c.fixture) + ": image is not the stalk summand at n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome corollary() {
    Outcome o;
    const Fixture& f = find_fixture("q3-z3-shift");
    Dims a = twisted_cyclic(f.algebra, f.group.action[1], 3).dims;
    Dims b = twisted_cyclic(f.algebra, f.group.action[2], 3).dims;
    o.require(a == b, "HC^s " + show(a) + " vs HC^s2 " + show(b));
    if (o.pass) o.detail << "HC^s = HC^s2 = " << show(a);
    return o;
}

Outcome lemma() {
    Outcome o;
    const Fixture& f1 = find_fixture("ground-field");
    const Fixture& f2 = find_fixture("trunc-poly-z2");
    struct Case {
        std::string name;
        MixedComplex m;
    };
    std::vector<Case> cases;
    cases.push_back({"ground-field HK", hk_bicomplex(f1.algebra, identity_map(f1.algebra), 5).mixed});
    cases.push_back({"ground-field proposition", proposition_bicomplex(f1.algebra, f1.group, 5).mixed});
    cases.push_back({"trunc-poly-z2 HK^s", hk_bicomplex(f2.algebra, f2.group.action[1], 5).mixed});
    cases.push_back({"trunc-poly-z2 proposition", proposition_bicomplex(f2.algebra, f2.group, 5).mixed});
    for (auto& c : cases) {
        UComplexReport r = u_complex_equivalence(c.m, 4);
        o.require(r.equal, c.name + ": u " + show(r.u_dims) + " vs bicomplex " + show(r.bicomplex_dims));
    }
    if (o.pass) o.detail << cases.size() << " mixed complexes, n <= 4";
    return o;
}

Outcome shapiro() {
    Outcome o;
    const Fixture& f = find_fixture("q3-s3");
    auto stalks = conjugacy_decomposition(f.algebra, f.group, 2);
    o.require(stalks.size() == 3, std::to_string(stalks.size()) + " stalks");
    Dims sum(3, 0);
    for (auto& s : stalks)
        for (std::size_t n = 0; n <= 2; ++n) sum[n] += s.dims[n];
    Dims coinv = coinvariant_bicomplex(f.algebra, f.group, 2).dims;
    o.require(sum == coinv, "stalk sum " + show(sum) + " vs coinvariant " + show(coinv));
    if (o.pass) o.detail << "sum " << show(sum);
    return o;
}

Outcome sbi() {
    Outcome o;
    std::size_t nodes = 0;
    for (const char* name : {"ground-field", "trunc-poly-z2"}) {
        const Fixture& f = find_fixture(name);
        ExactnessReport r = sbi_sequence(f.algebra, f.group, 3);
        for (auto& n : r.nodes) {
            ++nodes;
            o.require(n.exact && n.composite_zero, std::string(name) + " " + n.node + ": image " +
                                                       std::to_string(n.image_dim) + ", kernel " +
                                                       std::to_string(n.kernel_dim));
        }
    }
    if (o.pass) o.detail << nodes << " nodes exact";
    return o;
}

Outcome karoubi() {
    Outcome o;
    for (const char* name : {"ground-field", "trunc-poly-z2"}) {
        const Fixture& f = find_fixture(name);
        KaroubiReport r = karoubi_sequence(f.algebra, f.group, 3);
        for (auto& d : r.degrees) {
            if (d.degree > 2) continue;
            std::string at = std::string(name) + " n=" + std::to_string(d.degree) + " (HDR " + std::to_string(d.hdr) +
                             ", HC " + std::to_string(d.hc) + ", HH_{n+1} " + std::to_string(d.hh) + ")";
            o.require(d.left_injective, at + ": left map not injective");
            o.require(d.composite_zero, at + ": composite nonzero");
            o.require(d.middle_exact, at + ": middle node inexact");
        }
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    for (const Fixture& f : builtin_fixtures()) {
        JobConfig job = fixture_job(f.name);
        std::string a = emit_machine(run("all", job));
        std::string b = emit_machine(run("all", job));
        o.require(a == b, f.name + ": machine reports differ");
    }
    if (o.pass) o.detail << builtin_fixtures().size() << " fixtures";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "operator identities", operator_identities},
        {2, "baseline HC(Q)", baseline},
        {3, "proposition bicomplex", proposition},
        {4, "theorem, cyclic case", theorem},
        {5, "power comparison", corollary},
        {6, "u-complex equivalence", lemma},
        {7, "Shapiro decomposition", shapiro},
        {8, "SBI exactness", sbi},
        {9, "Karoubi sequence", karoubi},
        {10, "determinism", determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        if (!o.pass) ++failures;
        std::printf("criterion %d (%s): %s  %s\n", c.id, c.title, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
