#include "thl/commands.hpp"

#include "thl/crossed.hpp"
#include "thl/elimination.hpp"
#include "thl/errors.hpp"
#include "thl/sequences.hpp"
#include "thl/twisted.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>

namespace thl {

namespace {

using Dims = std::vector<std::size_t>;

std::string at_degree(std::size_t n) { return "n=" + std::to_string(n); }

std::string dims_text(const Dims& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

void compare_dims(Report& rep, const std::string& check, const Dims& a, const Dims& b) {
    for (std::size_t n = 0; n < std::max(a.size(), b.size()); ++n) {
        bool ok = n < a.size() && n < b.size() && a[n] == b[n];
        rep.add_check(check, at_degree(n), ok, ok ? "" : dims_text(a) + " vs " + dims_text(b));
    }
}

struct Context {
    const JobConfig& job;
    Report& rep;
    std::size_t N;
    const Algebra& A() const { return job.algebra; }
    const FiniteGroupAction& G() const { return job.group; }
    std::string name(std::size_t g) const { return G().names[g]; }
};

void cmd_validate(Context& c) {
    auto guarded = [&](const std::string& check, const std::function<void()>& f) {
        try {
            f();
            c.rep.add_check(check, "", true);
        } catch (const Error& e) {
            c.rep.add_check(check, "", false, e.what());
        }
    };
    guarded("algebra laws", [&] { validate_algebra(c.A()); });
    guarded("group action", [&] { validate_action(c.A(), c.G()); });
    guarded("unit is basis vector 0", [&] {
        if (c.A().unit_basis_index() != std::optional<std::size_t>(0))
            throw ReducedBasisError("normalized complexes need the unit as basis vector 0");
    });
    Algebra X;
    guarded("crossed product algebra laws", [&] { X = crossed_product(c.A(), c.G()); });
    if (X.dim == c.A().dim * c.G().order)
        c.rep.add_check("inner action (1#h)(a#e)(1#h^-1) = h(a)#e", "", crossed_product_inner_action_holds(c.A(), c.G(), X));
    ConjugacyData cd = conjugacy_data(c.G());
    std::size_t total = 0;
    bool divides = true;
    for (std::size_t k = 0; k < cd.classes.size(); ++k) {
        total += cd.classes[k].size();
        divides = divides && c.G().order % cd.centralizers[k].size() == 0 &&
                  cd.classes[k].size() * cd.centralizers[k].size() == c.G().order;
    }
    c.rep.add_check("conjugacy classes partition G", "", total == c.G().order);
    c.rep.add_check("class size times centralizer order = |G|", "", divides);
    c.rep.notes.push_back("algebra dimension " + std::to_string(c.A().dim) + ", group order " +
                          std::to_string(c.G().order) + ", " + std::to_string(cd.classes.size()) + " conjugacy classes");
}

void cmd_hc_twisted(Context& c) {
    std::size_t g = c.job.twist_element();
    c.rep.add_table("HH^" + c.name(g), twisted_hochschild(c.A(), c.G().action[g], c.N).dims);
    c.rep.add_table("HC^" + c.name(g), twisted_cyclic(c.A(), c.G().action[g], c.N).dims);
}

void cmd_hc_crossed(Context& c) {
    PropositionBicomplex pb = proposition_bicomplex(c.A(), c.G(), c.N);
    Algebra X = crossed_product(c.A(), c.G());
    Dims oracle = twisted_cyclic(X, identity_map(X), c.N).dims;
    c.rep.add_table("HC(AxG) proposition", pb.homology.dims);
    c.rep.add_table("HC(AxG) crossed-product oracle", oracle);
    compare_dims(c.rep, "proposition bicomplex = crossed-product oracle", pb.homology.dims, oracle);
}

void cmd_hc_coinv(Context& c) {
    Dims co = coinvariant_bicomplex(c.A(), c.G(), c.N).dims;
    c.rep.add_table("HC(AxG) coinvariant", co);
    c.rep.add_table("HC^G", hcG_bicomplex(c.A(), c.G(), c.N).dims);
    Dims sum(c.N + 1, 0);
    for (const Stalk& s : conjugacy_decomposition(c.A(), c.G(), c.N)) {
        c.rep.add_table("HC stalk [" + c.name(s.representative) + "]", s.dims);
        for (std::size_t n = 0; n <= c.N; ++n) sum[n] += s.dims[n];
    }
    compare_dims(c.rep, "sum of stalks = coinvariant bicomplex", sum, co);
}

void cmd_hc_lambda(Context& c) {
    bool coinv = c.job.task.lambda_coinvariants;
    LambdaComplex lc = connes_lambda_complex(c.A(), c.G(), c.N, coinv);
    if (coinv) {
        c.rep.add_table("HC(AxG) lambda", lc.homology.dims);
        compare_dims(c.rep, "lambda complex with G-coinvariants = coinvariant bicomplex", lc.homology.dims,
                     coinvariant_bicomplex(c.A(), c.G(), c.N).dims);
    } else {
        c.rep.add_table("HC lambda without G-coinvariants", lc.homology.dims);
        compare_dims(c.rep, "lambda complex without G-coinvariants = HC^G bicomplex", lc.homology.dims,
                     hcG_bicomplex(c.A(), c.G(), c.N).dims);
    }
}

void cmd_hh_G(Context& c) {
    Dims norm = g_hochschild(c.A(), c.G(), c.N, true).dims;
    Dims full = g_hochschild(c.A(), c.G(), c.N, false).dims;
    c.rep.add_table("HH^G", norm);
    c.rep.add_table("HH^G unnormalized", full);
    compare_dims(c.rep, "normalized HH^G = unnormalized HH^G", norm, full);
    if (c.G().order == 1)
        compare_dims(c.rep, "HH^G for trivial G = HH^id", norm,
                     twisted_hochschild(c.A(), identity_map(c.A()), c.N).dims);
}

void cmd_hdr_G(Context& c) {
    DeRhamComplex dr = derham_complex(c.A(), c.G(), c.N);
    c.rep.add_table("HDR^G", dr.homology.dims);
    bool dd = true;
    for (std::size_t n = 0; n + 1 < dr.d.size(); ++n) dd = dd && (dr.d[n + 1] * dr.d[n]).is_zero();
    c.rep.add_check("d^2 = 0 on coinvariant modules", "", dd);
    c.rep.add_check("d descends to the abelianized modules", "", true);
}

void cmd_verify_identities(Context& c) {
    std::size_t M = c.N + 1;
    for (const IdentityCheck& ic : verify_gj_identities(c.A(), c.G(), M))
        c.rep.add_check(ic.name, ic.location, ic.pass, ic.detail);
    for (std::size_t p = 1; p <= M; ++p)
        for (std::size_t q = 0; p + q <= M; ++q) {
            SparseMatrix beta = beta_map(c.A(), c.G(), p, q);
            std::vector<bool> hit(beta.rows(), false);
            bool perm = beta.rows() == beta.cols();
            for (std::size_t j = 0; perm && j < beta.cols(); ++j) {
                const auto& col = beta.column(j);
                perm = col.size() == 1 && col[0].second == 1 && !hit[col[0].first];
                if (perm) hit[col[0].first] = true;
            }
            c.rep.add_check("beta is a permutation", "(" + std::to_string(p) + "," + std::to_string(q) + ")", perm);
        }
}

bool generates(const FiniteGroupAction& G, std::size_t g) { return G.element_order(g) == G.order; }

void cmd_verify_theorem(Context& c) {
    const std::size_t g = c.job.twist_element();
    const std::size_t r = c.G().order;
    Dims hcg = twisted_cyclic(c.A(), c.G().action[g], c.N).dims;
    Dims total = coinvariant_bicomplex(c.A(), c.G(), c.N).dims;
    c.rep.add_table("HC^" + c.name(g), hcg);
    c.rep.add_table("HC(AxG) coinvariant", total);

    const bool cyclic = generates(c.G(), g);
    if (cyclic) {
        Dims scaled;
        for (auto x : hcg) scaled.push_back(r * x);
        compare_dims(c.rep, "dim HC(AxG) = " + std::to_string(r) + " dim HC^" + c.name(g), total, scaled);
    } else {
        c.rep.skip("dim HC(AxG) = r dim HC^g", "", "G is not generated by " + c.name(g));
    }

    TheoremMapReport tm = theorem_map_f(c.A(), c.G(), g, c.N);
    c.rep.add_table("rank f (g=" + c.name(g) + ")", tm.rank);
    c.rep.add_table("HC stalk of [" + c.name(c.G().inverse[g]) + "] in HC(AxG)", tm.stalk_dims);
    for (std::size_t n = 0; n <= c.N; ++n) {
        c.rep.add_check("f injective", at_degree(n), tm.injective[n],
                        tm.injective[n] ? "" : "rank " + std::to_string(tm.rank[n]) + " < " + std::to_string(tm.source_dims[n]));
        c.rep.add_check("image of f inside the stalk of g^-1", at_degree(n), tm.within_stalk[n]);
        c.rep.add_check("image of f is the whole stalk (direct summand)", at_degree(n), tm.onto_stalk[n]);
    }

    if (cyclic) {
        const std::size_t order = c.G().element_order(g);
        std::size_t power = g;
        for (std::size_t k = 2; k < order; ++k) {
            power = c.G().mul(power, g);
            if (std::gcd(k, order) != 1) continue;
            Dims other = twisted_cyclic(c.A(), c.G().action[power], c.N).dims;
            c.rep.add_table("HC^" + c.name(power), other);
            compare_dims(c.rep, "HC^" + c.name(g) + " = HC^" + c.name(power), hcg, other);
        }
    } else {
        c.rep.skip("HC^g = HC^(g^k) for generators", "", "G is not generated by " + c.name(g));
    }

    Dims sum(c.N + 1, 0);
    for (const Stalk& s : conjugacy_decomposition(c.A(), c.G(), c.N))
        for (std::size_t n = 0; n <= c.N; ++n) sum[n] += s.dims[n];
    compare_dims(c.rep, "sum of stalks = coinvariant bicomplex", sum, total);
}

void cmd_verify_lemma(Context& c) {
    const std::size_t g = c.job.twist_element();
    const std::size_t M = c.N + 1;
    HKBicomplex hk = hk_bicomplex(c.A(), c.G().action[g], M);
    UComplexReport a = u_complex_equivalence(hk.mixed, M);
    c.rep.add_table("HC^" + c.name(g) + " u-complex", a.u_dims);
    c.rep.add_table("HC^" + c.name(g) + " bicomplex", a.bicomplex_dims);
    compare_dims(c.rep, "u-complex = bicomplex, HC^" + c.name(g), a.u_dims, a.bicomplex_dims);
    CoinvariantComplex co = coinvariant_mixed(c.A(), c.G(), M + 1);
    UComplexReport b = u_complex_equivalence(co.complex.mixed, M);
    c.rep.add_table("HC(AxG) u-complex", b.u_dims);
    c.rep.add_table("HC(AxG) bicomplex", b.bicomplex_dims);
    compare_dims(c.rep, "u-complex = bicomplex, coinvariant", b.u_dims, b.bicomplex_dims);
}

void cmd_verify_sbi(Context& c) {
    ExactnessReport r = sbi_sequence(c.A(), c.G(), c.N);
    c.rep.add_sequence("SBI", r);
    c.rep.add_check("composites zero at every node", "", r.all_composites_zero());
}

void cmd_verify_karoubi(Context& c) {
    KaroubiReport k = karoubi_sequence(c.A(), c.G(), c.N);
    c.rep.add_sequence("Karoubi", k.exactness);
    for (const auto& d : k.degrees) {
        std::string loc = at_degree(d.degree);
        c.rep.add_check("left map defined on every class", loc, d.left_defined);
        c.rep.add_check("left map independent of representatives", loc, d.left_well_defined);
        c.rep.add_check("left map injective", loc, d.left_injective,
                        "HDR " + std::to_string(d.hdr) + ", rank " + std::to_string(d.left_rank));
        c.rep.add_check("composite zero", loc, d.composite_zero);
        c.rep.add_check("exact at the middle node", loc, d.middle_exact,
                        "HC " + std::to_string(d.hc) + ", rank L " + std::to_string(d.left_rank) + ", rank R " +
                            std::to_string(d.right_rank));
    }
    if (c.N == 0) c.rep.skip("Karoubi sequence", "", "needs max degree at least 1");
}

using Command = void (*)(Context&);

const std::vector<std::pair<std::string, Command>>& commands() {
    static const std::vector<std::pair<std::string, Command>> table = {
        {"validate", cmd_validate},
        {"hc-twisted", cmd_hc_twisted},
        {"hc-crossed", cmd_hc_crossed},
        {"hc-coinv", cmd_hc_coinv},
        {"hc-lambda", cmd_hc_lambda},
        {"hh-G", cmd_hh_G},
        {"hdr-G", cmd_hdr_G},
        {"verify-identities", cmd_verify_identities},
        {"verify-theorem", cmd_verify_theorem},
        {"verify-lemma", cmd_verify_lemma},
        {"verify-sbi", cmd_verify_sbi},
        {"verify-karoubi", cmd_verify_karoubi},
    };
    return table;
}

void run_one(const std::string& name, Command f, Context& c) {
    auto start = std::chrono::steady_clock::now();
    try {
        f(c);
    } catch (const ValidationError&) {
        throw;
    } catch (const ParseError&) {
        throw;
    } catch (const ReducedBasisError&) {
        throw;
    } catch (const Error& e) {
        c.rep.add_check(name + " completed", "", false, e.what());
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    c.rep.timings.emplace_back(name, dt.count());
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, f] : commands()) n.push_back(name);
        n.push_back("all");
        return n;
    }();
    return names;
}

Report run(const std::string& command, const JobConfig& job) {
    Report rep;
    rep.job = job.name;
    rep.command = command;
    rep.max_degree = job.max_degree();
    Context c{job, rep, rep.max_degree};
    if (job.task.twist) job.twist_element();
    bool found = false;
    for (const auto& [name, f] : commands()) {
        if (command == "all" || command == name) {
            found = true;
            run_one(name, f, c);
        }
    }
    if (!found) throw ValidationError("unknown command '" + command + "'");
    return rep;
}

} // namespace thl
