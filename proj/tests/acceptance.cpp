// End-to-end acceptance suite. Each criterion prints exactly one line,
// "criterion N: PASS|FAIL -- <summary>", and the process exits 0 only if
// every criterion passes. All randomness is seeded (master seed 0), all
// comparisons are exact; criterion 1 additionally enforces its wall-clock
// budget of five minutes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "stag/fuzz.hpp"
#include "stag/json_io.hpp"
#include "stag/stagger.hpp"
#include "stag/verify.hpp"

namespace {

using namespace stag;
using clock_t_ = std::chrono::steady_clock;

double seconds_since(clock_t_::time_point t0) {
    return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

struct Samples {
    PosetPtr chain5 = chain_poset({"a", "b", "c", "d", "e"});
    PosetPtr chain2 = chain_poset({"c", "o"});
    PosetPtr chain3 = chain_poset({"a", "b", "c"});
    BaricRealization support5 = BaricRealization::support_level(chain5, {0, 1, 2, 3, 4});
    BaricRealization graded = BaricRealization::graded_weight(-2, 2);
    // 100 objects per field = 200 per realization, seed 0 throughout
    std::vector<Complex> sup_q = random_complexes(0, 100, chain5, Field::Q());
    std::vector<Complex> sup_f5 = random_complexes(0, 100, chain5, Field::Fp(5));
    std::vector<Complex> gr_q = random_complexes(0, 100, graded.poset(), Field::Q());
    std::vector<Complex> gr_f5 = random_complexes(0, 100, graded.poset(), Field::Fp(5));

    BaricRealization a2(const Field& k) const {
        return BaricRealization::exceptional(
            {Complex::from_rep(PosetRep::simple(chain2, k, 1), 0),
             Complex::from_rep(PosetRep::simple(chain2, k, 0), 0)});
    }
};

bool report_line(int n, bool pass, const std::string& summary) {
    std::printf("criterion %d: %s -- %s\n", n, pass ? "PASS" : "FAIL", summary.c_str());
    std::fflush(stdout);
    return pass;
}

// 1. Axiom and truncation-identity suites on all three realization kinds,
//    200 fuzzed objects each over Q and F_5, within five minutes.
bool criterion1(const Samples& s) {
    auto t0 = clock_t_::now();
    std::size_t checks = 0, fails = 0;
    auto run = [&](const BaricRealization& b, const std::vector<Complex>& sample) {
        Report r = verify_baric_axioms(b, sample);
        r.merge(verify_truncation_identities(b, sample));
        checks += r.checks.size();
        fails += r.fail_count();
    };
    run(s.support5, s.sup_q);
    run(s.support5, s.sup_f5);
    run(s.graded, s.gr_q);
    run(s.graded, s.gr_f5);
    run(s.a2(Field::Q()), random_complexes(0, 100, s.chain2, Field::Q()));
    run(s.a2(Field::Fp(5)), random_complexes(0, 100, s.chain2, Field::Fp(5)));
    double dt = seconds_since(t0);
    bool pass = fails == 0 && dt < 300.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%zu axiom/identity checks, %zu failed, %.0fs (budget 300s)", checks,
                  fails, dt);
    return report_line(1, pass, buf);
}

// 2. The eleven compatibility sub-checks on the stratified and graded
//    instances, same fuzz samples.
bool criterion2(const Samples& s) {
    std::size_t checks = 0, fails = 0;
    auto run = [&](const BaricRealization& b, const std::vector<Complex>& sample) {
        StaggerContext ctx{b, 0, false};
        Report r = verify_compat_suite(ctx, sample);
        checks += r.checks.size();
        fails += r.fail_count();
    };
    run(s.support5, s.sup_q);
    run(s.support5, s.sup_f5);
    run(s.graded, s.gr_q);
    run(s.graded, s.gr_f5);
    char buf[120];
    std::snprintf(buf, sizeof buf, "%zu compatibility checks, %zu failed", checks, fails);
    return report_line(2, fails == 0, buf);
}

// 3. Staggered membership equals the direct support/costalk conditions on
//    600 fuzzed objects over the two stratified instances, and the minimal
//    extension of the rank-one object in degree -1 on the open stratum is
//    the constant object shifted by one.
bool criterion3(const Samples& s) {
    std::size_t objects = 0, fails = 0;
    auto run = [&](const PosetPtr& p, std::vector<int> lv) {
        BaricRealization b = BaricRealization::support_level(p, std::move(lv));
        StaggerContext ctx{b, 0, false};
        for (const Field& k : {Field::Q(), Field::Fp(5)}) {
            std::vector<Complex> sample = random_complexes(0, 150, p, k);
            objects += sample.size();
            fails += verify_perverse_equivalence(ctx, sample).fail_count();
        }
    };
    run(s.chain2, {0, 1});
    run(s.chain3, {0, 1, 2});

    bool ic_ok = false;
    {
        const Field k = Field::Q();
        BaricRealization b = BaricRealization::support_level(s.chain2, {0, 1});
        StaggerContext ctx{b, 0, false};
        certify_compatibility(ctx, random_complexes(0, 30, s.chain2, k));
        if (ctx.certified) {
            std::vector<bool> u{false, true};
            PosetPtr pu = sub_poset(*s.chain2, u);
            Complex f = Complex::from_rep(PosetRep::simple(pu, k, 0), 0).shift(1);
            Complex ic = intermediate_extension(ctx, u, f);
            Complex expect = Complex::from_rep(PosetRep::constant(s.chain2, k), 0).shift(1);
            Replacement ri = injective_replacement(ic);
            for (const ChainMap& g : homotopy_hom_basis(expect, ri.obj))
                ic_ok = ic_ok || is_quasi_iso(g);
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%zu objects, %zu membership disagreements; minimal extension %s",
                  objects, fails, ic_ok ? "is the shifted constant object" : "mismatch");
    return report_line(3, fails == 0 && ic_ok, buf);
}

// 4. The staggered decomposition terminates within its derived step budget
//    (length x levels + 2) on every fuzz case, with memberships and the
//    cone property checked each time.
bool criterion4(const Samples& s) {
    std::size_t cases = 0, fails = 0;
    auto run = [&](const BaricRealization& b, const PosetPtr& p) {
        StaggerContext ctx{b, 0, false};
        std::vector<Complex> sample = random_complexes(0, 50, p, Field::Q());
        {
            std::vector<Complex> more = random_complexes(0, 50, p, Field::Fp(5));
            sample.insert(sample.end(), more.begin(), more.end());
        }
        certify_compatibility(ctx, sample);
        if (!ctx.certified) {
            ++fails;
            return;
        }
        for (const Complex& x : sample) {
            ++cases;
            try {
                StagTriangle t = stag_decompose(ctx, x);  // asserts both memberships
                if (!is_quasi_iso(t.rep) || !is_distinguished(t.incl, t.proj)) ++fails;
            } catch (const std::exception&) {
                ++fails;  // budget exhausted or a postcondition failed
            }
        }
    };
    run(BaricRealization::support_level(s.chain2, {0, 1}), s.chain2);
    run(BaricRealization::support_level(s.chain3, {0, 1, 2}), s.chain3);
    run(s.graded, s.graded.poset());
    char buf[120];
    std::snprintf(buf, sizeof buf, "%zu decompositions, %zu failures", cases, fails);
    return report_line(4, fails == 0, buf);
}

// 5. The exceptional-collection axioms on the two-step instance, including
//    the full Ext table and the layer condition for the standard partners.
bool criterion5(const Samples& s) {
    std::size_t checks = 0, fails = 0;
    for (const Field& k : {Field::Q(), Field::Fp(5)}) {
        BaricRealization b = s.a2(k);
        std::vector<Complex> deltas{
            Complex::from_rep(PosetRep::simple(s.chain2, k, 1), 0),
            Complex::from_rep(PosetRep::constant(s.chain2, k), 0)};
        Report r = verify_exceptional_axioms(b, deltas);
        checks += r.checks.size();
        fails += r.fail_count();
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%zu collection checks, %zu failed", checks, fails);
    return report_line(5, fails == 0, buf);
}

// 6. Weights add under the convolution tensor, exhaustively over pure
//    rank-one generators up to weight 6 (window 0..12, shifts -1..1), and
//    the graded dual swaps the staggered halves on 200 fuzzed complexes.
bool criterion6(const Samples& s) {
    std::size_t pairs = 0, fails = 0;
    {
        BaricRealization b = BaricRealization::graded_weight(0, 12);
        const Field k = Field::Q();
        auto pure = [&](int w, int d) {
            return Complex::from_rep(
                       PosetRep::simple(b.poset(), k, b.weight_index(w)), 0)
                .shift(d);
        };
        for (int a = 0; a <= 6; ++a)
            for (int c = 0; c <= 6; ++c)
                for (int i = -1; i <= 1; ++i)
                    for (int j = -1; j <= 1; ++j) {
                        ++pairs;
                        Complex t = graded_tensor(b, pure(a, i), pure(c, j));
                        if (!member_leq(b, t, a + c) || !member_geq(b, t, a + c)) ++fails;
                    }
    }
    std::size_t dual_fails = 0, dual_checks = 0;
    for (const std::vector<Complex>* sample : {&s.gr_q, &s.gr_f5}) {
        Report r = verify_mult_duality(s.graded, *sample);
        dual_checks += r.checks.size();
        dual_fails += r.fail_count();
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%zu pure products (%zu failed), %zu duality checks (%zu failed)",
                  pairs, fails, dual_checks, dual_fails);
    return report_line(6, fails == 0 && dual_fails == 0, buf);
}

// 7. Heart structure: the purity oracle (h^{-n} pure of weight n) matches
//    the membership-based heart test on every fuzzed graded object;
//    composition-series length is additive across 100 random heart short
//    exact sequences; every enumerated simple heart object has length one.
bool criterion7(const Samples& s) {
    std::size_t objects = 0, purity_fails = 0;
    {
        StaggerContext ctx{s.graded, 0, false};
        auto pure_heart = [&](const Complex& x) {
            for (int m = x.lo(); m <= x.hi(); ++m) {
                PosetRep h = x.cohomology(m);
                for (std::size_t e = 0; e < s.graded.poset()->size(); ++e)
                    if (h.dim(e) > 0 && s.graded.level_of(e) != -m) return false;
            }
            return true;
        };
        for (const std::vector<Complex>* sample : {&s.gr_q, &s.gr_f5})
            for (const Complex& x : *sample) {
                ++objects;
                if (pure_heart(x) != in_heart(ctx, x)) ++purity_fails;
            }
    }

    const Field k = Field::Q();
    BaricRealization b2 = BaricRealization::support_level(s.chain2, {0, 1});
    StaggerContext ctx2{b2, 0, false};
    certify_compatibility(ctx2, random_complexes(0, 30, s.chain2, k));
    std::size_t ses_done = 0, ses_fails = 0;
    if (ctx2.certified) {
        // the two simple heart objects, and random iterated extensions of
        // them (cone over a random class in Hom^1 of a simple into the
        // object so far) as the random heart objects
        std::vector<Complex> sims{
            Complex::from_rep(PosetRep::simple(s.chain2, k, 0), 0),
            Complex::from_rep(PosetRep::constant(s.chain2, k), 0).shift(1)};
        auto random_heart = [&](Rng& rng) {
            Complex x = sims[rng.below(sims.size())];
            std::size_t steps = rng.below(3);
            for (std::size_t st = 0; st < steps; ++st) {
                const Complex& sim = sims[rng.below(sims.size())];
                Replacement rx = injective_replacement(x);
                ChainMap g = ChainMap::zero(sim.shift(-1), rx.obj);
                for (const ChainMap& h : homotopy_hom_basis(sim.shift(-1), rx.obj))
                    g = g + h.scaled(k.from_int(rng.in_range(-2, 2)));
                x = cone(g).c;
            }
            return x;
        };
        Rng rng(0);
        while (ses_done < 100) {
            Complex a = random_heart(rng);
            Complex bb = random_heart(rng);
            Replacement rb = injective_replacement(bb);
            ChainMap f = ChainMap::zero(a, rb.obj);
            for (const ChainMap& g : homotopy_hom_basis(a, rb.obj))
                f = f + g.scaled(k.from_int(rng.in_range(-2, 2)));
            try {
                HeartSES ses = heart_kernel_cokernel(ctx2, f);
                std::size_t lk = heart_length(ctx2, ses.ker);
                std::size_t li = heart_length(ctx2, ses.im);
                std::size_t lc = heart_length(ctx2, ses.coker);
                if (lk + li != heart_length(ctx2, a) ||
                    li + lc != heart_length(ctx2, rb.obj))
                    ++ses_fails;
            } catch (const std::exception&) {
                ++ses_fails;
            }
            ++ses_done;
        }
    } else {
        ++ses_fails;
    }

    std::size_t ic_count = 0, ic_fails = 0;
    BaricRealization b3 = BaricRealization::support_level(s.chain3, {0, 1, 2});
    StaggerContext ctx3{b3, 0, false};
    certify_compatibility(ctx3, random_complexes(0, 30, s.chain3, k));
    for (StaggerContext* ctx : {&ctx2, &ctx3}) {
        if (!ctx->certified) {
            ++ic_fails;
            continue;
        }
        for (std::size_t x = 0; x < ctx->baric.poset()->size(); ++x) {
            ++ic_count;
            try {
                Complex ic = ic_object(*ctx, x, ctx->baric.level_of(x), k);
                if (heart_length(*ctx, ic) != 1) ++ic_fails;
            } catch (const std::exception&) {
                ++ic_fails;
            }
        }
    }

    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "%zu purity comparisons (%zu off), %zu/100 exact sequences (%zu off), "
                  "%zu simple objects (%zu off)",
                  objects, purity_fails, ses_done, ses_fails, ic_count, ic_fails);
    return report_line(7,
                       purity_fails == 0 && ses_done == 100 && ses_fails == 0 &&
                           ic_count == 5 && ic_fails == 0,
                       buf);
}

// 8. Two full runs with the same seed serialize to byte-identical JSON.
bool criterion8(const Samples&) {
    auto suite = []() {
        Report out;
        auto merge = [&out](const std::string& prefix, Report r) {
            for (CheckResult& c : r.checks)
                out.add(prefix + "/" + c.id, c.pass, std::move(c.detail));
        };
        PosetPtr p = chain_poset({"c", "o"});
        BaricRealization b = BaricRealization::support_level(p, {0, 1});
        BaricRealization g = BaricRealization::graded_weight(-2, 2);
        for (const Field& k : {Field::Q(), Field::Fp(5)}) {
            std::vector<Complex> sup = random_complexes(0, 25, p, k);
            std::vector<Complex> gr = random_complexes(0, 25, g.poset(), k);
            std::string tag = "/" + k.to_string();
            merge("axioms" + tag, verify_baric_axioms(b, sup));
            merge("identities" + tag, verify_truncation_identities(b, sup));
            StaggerContext ctx{b, 0, false};
            merge("compat" + tag, verify_compat_suite(ctx, sup));
            merge("perverse" + tag, verify_perverse_equivalence(ctx, sup));
            merge("gluing" + tag, verify_gluing(b, {true, false}, sup));
            merge("mult" + tag, verify_mult_duality(g, gr));
        }
        return report_to_json(out).dump(2);
    };
    std::string first = suite();
    std::string second = suite();
    bool pass = first == second;
    char buf[120];
    std::snprintf(buf, sizeof buf, "two runs, %zu bytes each, %s", first.size(),
                  pass ? "byte-identical" : "reports differ");
    return report_line(8, pass, buf);
}

}  // namespace

int main(int argc, char** argv) {
    Samples s;
    int only = argc > 1 ? std::atoi(argv[1]) : 0;  // run one criterion when given
    bool ok = true;
    bool (*crit[])(const Samples&) = {criterion1, criterion2, criterion3, criterion4,
                                      criterion5, criterion6, criterion7, criterion8};
    for (int n = 1; n <= 8; ++n)
        if (only == 0 || only == n) ok &= crit[n - 1](s);
    return ok ? 0 : 1;
}
