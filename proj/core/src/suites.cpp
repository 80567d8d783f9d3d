#include "twisted_hecke/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "twisted_hecke/bosa.hpp"
#include "twisted_hecke/dloper.hpp"
#include "twisted_hecke/errors.hpp"
#include "twisted_hecke/matschub.hpp"
#include "twisted_hecke/parallel.hpp"
#include "twisted_hecke/parabolic.hpp"
#include "twisted_hecke/wallcross.hpp"

namespace th {

int SuiteReport::failures() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.ok; }));
}

namespace {

using Task = std::pair<std::string, std::function<std::string()>>; // id, body returning "" on success

std::vector<CaseResult> run_tasks(const std::vector<Task>& tasks, int jobs) {
    return parallel_map(tasks.size(), jobs, [&](std::size_t k) {
        CaseResult r;
        r.id = tasks[k].first;
        try {
            r.detail = tasks[k].second();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.ok = r.detail.empty();
        return r;
    });
}

std::string diff(const LocalizedClass& a, const LocalizedClass& b) {
    for (int s = 0; s < a.size(); ++s)
        if (!(a[s] == b[s])) return "at " + a.weyl().format(s) + ": lhs " + a[s].str() + " ; rhs " + b[s].str();
    return {};
}

std::string tag(const WeylGroup& W, int w, const Weight& l) {
    return W.system().name() + " w=" + W.format(w) + " slope=" + format_weight(l);
}

WeylPtr group(const std::string& name) { return WeylGroup::make(RootSystem::parse(name)); }

std::vector<WeylPtr> groups(const SuiteOptions& o, std::vector<std::string> defaults) {
    if (!o.system.empty()) defaults = {o.system};
    std::vector<WeylPtr> out;
    for (const std::string& s : defaults) out.push_back(group(s));
    return out;
}

void require_type_a(const WeylGroup& W, const std::string& suite) {
    if (W.system().kind() != RootKind::A) throw Error(ErrorCode::WrongType, suite + " needs a type A system");
}

std::vector<Weight> slopes_for(const WeylGroup& W, const SuiteOptions& o, int fallback, std::mt19937_64& rng) {
    if (o.slope) {
        W.system().check_weight(*o.slope);
        return {*o.slope};
    }
    return sample_generic_slopes(W, o.samples > 0 ? o.samples : fallback, rng);
}

QRat dist_to_integers(const QRat& p) {
    const QRat f = p - QRat(floor_q(p));
    return std::min(f, QRat(1) - f);
}

// ---------------------------------------------------------------------------

SuiteReport suite_example(const SuiteOptions& o) {
    SuiteReport rep{"example", {}, {}};
    const WeylPtr W = group(o.system.empty() ? "A2" : o.system);
    if (W->system().kind() != RootKind::A || W->system().dim() != 2)
        throw Error(ErrorCode::InvalidInput, "the GL2 data point needs --system A2");
    std::vector<Weight> slopes = {{QRat(1, 7), QRat(3, 7)}, {QRat(0), QRat(0)}, {QRat(3, 2), QRat(-1, 3)},
                                  {QRat(2), QRat(5, 4)},    {QRat(-5, 7), QRat(1, 11)}};
    if (o.slope) slopes = {*o.slope};
    const RatFunc y = y_var();
    const RatFunc r12 = RatFunc::monomial(Monomial::var(t_(1)) / Monomial::var(t_(2)));
    const int s1 = W->simple(1);
    std::vector<Task> tasks;
    tasks.emplace_back("GL2 point class", [W, r12] {
        LocalizedClass e(W);
        e[0] = RatFunc(1) - r12;
        return diff(mc_point(W), e);
    });
    int differs_at_lambda = 0;
    for (const Weight& l : slopes) {
        LocalizedClass expect(W);
        expect[0] = (RatFunc(1) + y) * r12.pow(static_cast<int>(1 - ceil_q(l[1] - l[0])));
        expect[s1] = RatFunc(1) + y * r12.inverse();
        const Weight sl = W->act(s1, l);
        const std::string sfx = " slope=" + format_weight(l);
        tasks.emplace_back("T_{s1,lambda}(point)" + sfx, [=] { return diff(dl_right(1, l, mc_point(W)), expect); });
        tasks.emplace_back("T^L_{s1,s1 lambda}(point)" + sfx, [=] { return diff(dl_left(1, sl, mc_point(W)), expect); });
        tasks.emplace_back("mC(s1, s1 lambda) right" + sfx, [=] { return diff(mc_cell(W, s1, sl, Route::Right), expect); });
        tasks.emplace_back("mC(s1, s1 lambda) left" + sfx, [=] { return diff(mc_cell(W, s1, sl, Route::Left), expect); });
        tasks.emplace_back("LRR oracle at s1 lambda" + sfx, [=] { return diff(mc_via_lrr(W, {1}, sl), expect); });
        if (!(mc_cell(W, s1, l) == expect)) ++differs_at_lambda;
    }
    rep.cases = run_tasks(tasks, o.jobs);
    if (differs_at_lambda)
        rep.notes.push_back("the GL2 pair ((1+y)(t1/t2)^{1-ceil(l2-l1)}, 1+y t2/t1) is mC(s1, s1 lambda); it differs from mC(s1, lambda) at " +
                            std::to_string(differs_at_lambda) + " of " + std::to_string(slopes.size()) + " slopes");
    return rep;
}

SuiteReport suite_quadratic(const SuiteOptions& o) {
    SuiteReport rep{"quadratic", {}, {}};
    const WeylPtr W = group(o.system.empty() ? "A2" : o.system);
    std::mt19937_64 rng(o.seed);
    std::vector<QRat> fracs;
    for (long q = 2; q <= 12; ++q)
        for (long p = -3 * q + 1; p < 3 * q; ++p)
            if (std::gcd(p, q) == 1) fracs.emplace_back(p, q);
    std::shuffle(fracs.begin(), fracs.end(), rng);
    const std::size_t count = o.samples > 0 ? static_cast<std::size_t>(o.samples) : 48;
    fracs.resize(std::min(count, fracs.size()));
    std::sort(fracs.begin(), fracs.end());
    std::vector<QRat> params = fracs;
    for (long k = -2; k <= 2; ++k) params.emplace_back(k);
    std::vector<Task> tasks;
    for (int i = 1; i <= W->rank(); ++i)
        for (const QRat& a : params)
            for (Variant v : {Variant::Plain, Variant::Hat}) {
                const std::string id = std::string(v == Variant::Plain ? "T" : "That") + std::to_string(i) + "(" + a.str() + ")";
                tasks.emplace_back(id, [=] {
                    return verify_quadratic(W, i, a, v) ? std::string() : "composition is not -y id";
                });
            }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

SuiteReport suite_braid(const SuiteOptions& o) {
    SuiteReport rep{"braid", {}, {}};
    std::mt19937_64 rng(o.seed);
    const int g = std::max(o.grid, 1);
    std::vector<QRat> ints, fracs;
    for (long n = -2; n <= 2; ++n) {
        ints.emplace_back(n);
        for (long j = 1; j < g; ++j) fracs.push_back(QRat(n) + QRat(j, g));
    }
    const int per_stratum = std::max((o.samples > 0 ? o.samples : 120) / 4, 1);
    auto pick = [&](const std::vector<QRat>& pool) {
        return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    auto pairs = [&] {
        std::vector<std::pair<QRat, QRat>> out;
        for (int sa = 0; sa < 2; ++sa)
            for (int sb = 0; sb < 2; ++sb)
                for (int k = 0; k < per_stratum; ++k) {
                    if (fracs.empty() && (sa || sb)) continue;
                    out.emplace_back(pick(sa ? fracs : ints), pick(sb ? fracs : ints));
                }
        return out;
    };
    std::vector<std::string> kinds = {"A", "C2", "G2"};
    if (!o.kind.empty()) {
        if (std::find(kinds.begin(), kinds.end(), o.kind) == kinds.end())
            throw Error(ErrorCode::InvalidInput, "unknown braid kind '" + o.kind + "' (A, C2, G2)");
        kinds = {o.kind};
    }
    std::vector<Task> tasks;
    for (const std::string& kind : kinds) {
        for (const auto& [a, b] : pairs()) {
            std::vector<QRat> p;
            BraidForm form;
            std::string id;
            if (kind == "A") {
                // lambda = (l1, l1 + b, l1 + b + a): parameters l3-l2 = a, l2-l1 = b
                const QRat l1 = pick(fracs.empty() ? ints : fracs);
                p = {l1, l1 + b, l1 + b + a};
                form = BraidForm::A;
                id = "A lambda=" + format_weight(p);
            } else {
                p = {a, b};
                form = kind == "C2" ? BraidForm::C2 : BraidForm::G2;
                id = kind + " (a,b)=(" + a.str() + "," + b.str() + ")";
            }
            for (Variant v : {Variant::Plain, Variant::Hat})
                tasks.emplace_back(id + (v == Variant::Plain ? " plain" : " hat"), [=] {
                    return verify_braid(form, p, v) ? std::string() : "braid sides differ";
                });
        }
        if (kind == "A") {
            // integer parameters: the middle letter carries a+b or a+b-1
            for (long a = -2; a <= 2; ++a)
                for (long b = -2; b <= 2; ++b)
                    for (long shift : {0L, -1L})
                        for (Variant v : {Variant::Plain, Variant::Hat}) {
                            const std::vector<QRat> p = {QRat(a), QRat(b), QRat(a + b + shift)};
                            tasks.emplace_back("A integer a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                                   " middle=a+b" + (shift ? "-1" : "") + (v == Variant::Plain ? " plain" : " hat"),
                                               [=] {
                                                   return verify_braid(BraidForm::AMiddle, p, v) ? std::string()
                                                                                                 : "braid sides differ";
                                               });
                        }
            int holds = 0;
            for (long a = -2; a <= 2; ++a)
                for (long b = -2; b <= 2; ++b)
                    holds += verify_braid(BraidForm::AMiddle, {QRat(a), QRat(b), QRat(a + b + 1)}, Variant::Plain);
            rep.notes.push_back("integer case with middle parameter a+b+1 holds for " + std::to_string(holds) +
                                " of 25 pairs (a+b and a+b-1 are the valid cases)");
        }
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

SuiteReport suite_wordindep(const SuiteOptions& o) {
    SuiteReport rep{"wordindep", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A4", "C2", "G2"})) {
        for (const Weight& l : slopes_for(*W, o, 3, rng))
            for (int w = 0; w < W->size(); ++w)
                tasks.emplace_back(tag(*W, w, l), [W, w, l] {
                    const std::vector<Word> words = W->reduced_words(w);
                    const LocalizedClass base = mc_cell(W, w, l, RouteSpec{Route::Right, words.front()});
                    for (const Word& word : words)
                        for (Route r : {Route::Right, Route::Left}) {
                            std::string d = diff(mc_cell(W, w, l, RouteSpec{r, word}), base);
                            if (!d.empty())
                                return "word " + W->format_word(word) + (r == Route::Left ? " left " : " right ") + d;
                        }
                    return std::string();
                });
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

SuiteReport suite_leftright(const SuiteOptions& o) {
    SuiteReport rep{"leftright", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A4"})) {
        for (const Weight& l : slopes_for(*W, o, 3, rng))
            for (int w = 0; w < W->size(); ++w)
                tasks.emplace_back(tag(*W, w, l), [W, w, l] {
                    const LocalizedClass c = mc_cell(W, w, l, Route::Right);
                    std::string d = diff(mc_cell(W, w, l, Route::Left), c);
                    if (!d.empty()) return "left route " + d;
                    const RatFunc y = y_var();
                    for (int s = 1; s <= W->rank(); ++s) {
                        const int ws = W->rmul(w, s), sw = W->lmul(s, w);
                        const Weight sl = W->act(W->simple(s), l);
                        LocalizedClass rhs = mc_cell(W, ws, sl).scaled(minus_y_pow_half(W->length(w) - W->length(ws) + 1, y));
                        d = diff(dl_right(s, l, c), rhs);
                        if (!d.empty()) return "right step s" + std::to_string(s) + " " + d;
                        rhs = mc_cell(W, sw, l).scaled(minus_y_pow_half(W->length(w) - W->length(sw) + 1, y));
                        d = diff(dl_left(s, W->act(w, l), c), rhs);
                        if (!d.empty()) return "left step s" + std::to_string(s) + " " + d;
                    }
                    return std::string();
                });
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

SuiteReport suite_oracle(const SuiteOptions& o) {
    SuiteReport rep{"oracle", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A3", "C2"})) {
        for (const Weight& l : slopes_for(*W, o, 5, rng))
            for (int w = 0; w < W->size(); ++w)
                tasks.emplace_back(tag(*W, w, l), [W, w, l] {
                    const LocalizedClass c = mc_cell(W, w, l);
                    for (const Word& word : W->reduced_words(w)) {
                        std::string d = diff(mc_via_lrr(W, word, l), c);
                        if (!d.empty()) return "word " + W->format_word(word) + " " + d;
                    }
                    return std::string();
                });
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

SuiteReport suite_matrix(const SuiteOptions& o) {
    SuiteReport rep{"matrix", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    int literal_ok = 0, permuted_ok = 0, total = 0;
    for (const WeylPtr& W : groups(o, {"A3"})) {
        require_type_a(*W, "matrix");
        for (const Weight& l : slopes_for(*W, o, 3, rng))
            for (int w = 0; w < W->size(); ++w) {
                tasks.emplace_back(tag(*W, w, l), [W, w, l] {
                    const RatFunc left = mc_matrix(W, w, l, Route::Left);
                    if (!(mc_matrix(W, w, l, Route::Right) == left)) return std::string("left and right matrix routes differ");
                    if (!(matrix_closed_sum(*W, W->normal_form(w), l) == left)) return std::string("E * closed-formula sum differs");
                    for (Route r : {Route::Left, Route::Right}) {
                        CheckResult c = verify_kirwan_division(W, w, l, r);
                        if (!c.ok) return c.detail;
                    }
                    return std::string();
                });
                const RatFunc left = mc_matrix(W, w, l, Route::Left);
                literal_ok += matrix_closed_sum(*W, W->normal_form(w), l, ClosedFormula::Literal) == left;
                permuted_ok += mc_matrix(W, w, l, Route::Left, SlopeConvention::PermutedIndex) == left;
                ++total;
            }
    }
    rep.cases = run_tasks(tasks, o.jobs);
    rep.notes.push_back("closed formula without the diagonal factors 1/(1-x_j/t_j) matches in " +
                        std::to_string(literal_ok) + " of " + std::to_string(total) + " cases");
    rep.notes.push_back("left recursion with (lambda_{w(1)},...,lambda_{w(n)}) as w lambda matches in " +
                        std::to_string(permuted_ok) + " of " + std::to_string(total) + " cases");
    return rep;
}

SuiteReport suite_lift(const SuiteOptions& o) {
    SuiteReport rep{"lift", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A2", "A3"})) {
        require_type_a(*W, "lift");
        const int n = W->system().dim();
        std::vector<Weight> slopes = slopes_for(*W, o, 1, rng);
        if (!o.slope) slopes.push_back(Weight(static_cast<std::size_t>(n), QRat(0)));
        auto monos = std::make_shared<std::vector<RatFunc>>(lift_test_monomials(n));
        for (const Weight& l : slopes)
            for (int i = 1; i <= W->rank(); ++i)
                tasks.emplace_back(W->system().name() + " i=" + std::to_string(i) + " slope=" + format_weight(l),
                                   [W, l, i, n, monos] {
                                       for (const RatFunc& f : *monos) {
                                           CheckResult c = lift_check(W, i, l, f);
                                           if (!c.ok) return "on " + f.str() + ": " + c.detail;
                                           c = conjugation_check(W, i, l, f);
                                           if (!c.ok) return c.detail;
                                       }
                                       const RatFunc B = bb_factor(n);
                                       for (int w = 0; w < W->size(); ++w) {
                                           CheckResult c = lift_check(W, i, l, mc_matrix(W, w, l) / B);
                                           if (!c.ok) return "on B^-1 mC~(" + W->format(w) + "): " + c.detail;
                                       }
                                       return std::string();
                                   });
    }
    // the GL2 data point: two different lifts of the same class
    const WeylPtr W2 = group("A2");
    const Weight l = o.slope && o.slope->size() == 2 ? *o.slope : Weight{QRat(1, 7), QRat(3, 7)};
    const Weight sl = W2->act(W2->simple(1), l);
    auto v = [](VarId a, VarId b) { return RatFunc::monomial(Monomial::var(a) / Monomial::var(b)); };
    const RatFunc y = y_var();
    const RatFunc f0 = RatFunc(1) - v(x_(1), t_(2));
    const int e = static_cast<int>(1 - ceil_q(l[1] - l[0]));
    const RatFunc shown_r = (RatFunc(1) + y) * v(x_(1), x_(2)).pow(e) / (RatFunc(1) - v(x_(1), x_(2))) * f0 +
                            (RatFunc(1) + y * v(x_(1), x_(2))) / (RatFunc(1) - v(x_(2), x_(1))) * (RatFunc(1) - v(x_(2), t_(2)));
    const RatFunc shown_l = (RatFunc(1) + y) * v(t_(1), t_(2)).pow(e) / (RatFunc(1) - v(t_(1), t_(2))) * f0 +
                            (RatFunc(1) + y * v(t_(2), t_(1))) / (RatFunc(1) - v(t_(2), t_(1))) * (RatFunc(1) - v(x_(1), t_(1)));
    const std::string sfx = " slope=" + format_weight(l);
    tasks.emplace_back("GL2 Tcr_1(lambda)(f0) closed form" + sfx, [=] {
        return make_Tcr(W2, 1, l).apply(f0) == shown_r ? std::string() : "right lift differs from its closed form";
    });
    tasks.emplace_back("GL2 Tcl_1(s1 lambda)(f0) closed form" + sfx, [=] {
        return make_Tcl(W2, 1, sl).apply(f0) == shown_l ? std::string() : "left lift differs from its closed form";
    });
    tasks.emplace_back("GL2 lifts differ before kappa" + sfx, [=] {
        return make_Tcr(W2, 1, l).apply(f0) == make_Tcl(W2, 1, sl).apply(f0) ? "the two lifts coincide" : std::string();
    });
    tasks.emplace_back("GL2 lifts agree after kappa" + sfx, [=] {
        const LocalizedClass a = kirwan(W2, make_Tcr(W2, 1, l).apply(f0));
        std::string d = diff(a, kirwan(W2, make_Tcl(W2, 1, sl).apply(f0)));
        if (d.empty()) d = diff(a, mc_cell(W2, W2->simple(1), sl));
        return d;
    });
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

// A point on H_{alpha,0} whose other pairings avoid the integers.
std::optional<std::pair<Weight, QRat>> wall_point(const WeylGroup& W, const IVec& alpha, std::mt19937_64& rng) {
    const RootSystem& rs = W.system();
    for (int attempt = 0; attempt < 200; ++attempt) {
        Weight l = sample_generic_slopes(W, 1, rng).front();
        const Weight mu = l - (rs.pairing(l, alpha) / QRat(2)) * to_weight(alpha);
        QRat delta(1);
        bool ok = true;
        for (const IVec& b : rs.positive_roots()) {
            if (b == alpha) continue;
            const QRat p = rs.pairing(mu, b);
            if (p.is_integer()) {
                ok = false;
                break;
            }
            delta = std::min(delta, dist_to_integers(p));
        }
        if (ok) return std::make_pair(mu, delta / QRat(2));
    }
    return std::nullopt;
}

SuiteReport suite_wallcross(const SuiteOptions& o) {
    SuiteReport rep{"wallcross", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A3"})) {
        const RootSystem& rs = W->system();
        std::vector<IVec> walls = rs.positive_roots();
        if (!o.wall.empty()) walls = {parse_root(rs, o.wall)};
        const int samples = o.samples > 0 ? o.samples : 2;
        for (const IVec& alpha : walls)
            for (int k = 0; k < samples; ++k) {
                auto wp = wall_point(*W, alpha, rng);
                if (!wp) throw Error(ErrorCode::InvalidInput, "no usable point on the wall");
                const auto [l1, l2] = slopes_across(*W, alpha, wp->first, wp->second);
                const auto [l1b, unused] = slopes_across(*W, alpha, wp->first, wp->second / QRat(2));
                (void)unused;
                for (int w = 0; w < W->size(); ++w) {
                    std::ostringstream id;
                    id << rs.name() << " alpha=" << format_weight(to_weight(alpha)) << " w=" << W->format(w)
                       << " slopes=" << format_weight(l1) << "|" << format_weight(l2);
                    tasks.emplace_back(id.str(), [W, w, alpha, l1 = l1, l2 = l2, l1b = l1b] {
                        CheckResult c = wallcross_slope_check(W, w, alpha, l1, l2);
                        if (!c.ok) return c.detail;
                        c = wallcross_slope_check(W, w, alpha, l1, l1b);
                        if (!c.ok) return "same alcove: " + c.detail;
                        return std::string();
                    });
                }
            }
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

SuiteReport suite_chamber(const SuiteOptions& o) {
    SuiteReport rep{"chamber", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A3"})) {
        for (const Weight& l : slopes_for(*W, o, 1, rng))
            for (int sigma = 0; sigma < W->size(); ++sigma)
                for (int s = 1; s <= W->rank(); ++s)
                    for (int w = 0; w < W->size(); ++w)
                        tasks.emplace_back(tag(*W, w, l) + " sigma=" + W->format(sigma) + " s" + std::to_string(s),
                                           [W, w, sigma, s, l] {
                                               CheckResult c = wallcross_chamber_check(W, w, sigma, s, l);
                                               return c.ok ? std::string() : c.detail;
                                           });
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

SuiteReport suite_antiample(const SuiteOptions& o) {
    SuiteReport rep{"antiample", {}, {}};
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A3", "C2"})) {
        const Weight lm = small_anti_ample(*W);
        const Weight zero(lm.size(), QRat(0));
        for (int w = 0; w < W->size(); ++w)
            tasks.emplace_back(tag(*W, w, lm) + " equals slope 0", [W, w, lm, zero] {
                const LocalizedClass c = mc_cell(W, w, lm);
                std::string d = diff(mc_cell(W, w, zero), c);
                if (d.empty()) d = diff(mc_via_lrr(W, W->normal_form(w), zero), c);
                return d;
            });
        for (int wp = 0; wp < W->size(); ++wp)
            for (int w = 0; w < W->size(); ++w) {
                if (W->length(W->mul(wp, w)) != W->length(wp) + W->length(w)) continue;
                tasks.emplace_back(W->system().name() + " w'=" + W->format(wp) + " w=" + W->format(w), [W, wp, w, lm] {
                    CheckResult c = antiample_check(W, wp, w, lm);
                    return c.ok ? std::string() : c.detail;
                });
            }
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

SuiteReport suite_support(const SuiteOptions& o) {
    SuiteReport rep{"support", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A4"})) {
        for (const Weight& l : slopes_for(*W, o, 2, rng))
            for (int w = 0; w < W->size(); ++w)
                tasks.emplace_back(tag(*W, w, l), [W, w, l] {
                    const LocalizedClass c = mc_cell(W, w, l);
                    std::vector<int> bad = support_violations(c, w);
                    if (!bad.empty()) return "nonzero at " + W->format(bad.front()) + " outside the Bruhat interval";
                    // and nonzero on the whole interval
                    for (int s = 0; s < W->size(); ++s)
                        if (W->bruhat_leq(s, w) && c[s].is_zero()) return "vanishes at " + W->format(s) + " inside the interval";
                    return std::string();
                });
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

SuiteReport suite_periodicity(const SuiteOptions& o) {
    SuiteReport rep{"periodicity", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A3"})) {
        const int d = W->system().dim();
        std::vector<Weight> shifts;
        if (W->system().kind() == RootKind::A) {
            Weight e1(static_cast<std::size_t>(d), QRat(0)), mixed = e1, ones(static_cast<std::size_t>(d), QRat(1));
            e1[0] = QRat(1);
            mixed[static_cast<std::size_t>(d - 1)] = QRat(1);
            if (d > 1) mixed[static_cast<std::size_t>(d - 2)] = QRat(-2);
            shifts = {e1, mixed, ones};
        } else {
            for (const IVec& a : W->system().simple_roots()) shifts.push_back(to_weight(a));
            shifts.push_back(to_weight(W->system().positive_roots().back()));
        }
        for (const Weight& l : slopes_for(*W, o, 1, rng))
            for (const Weight& mu : shifts)
                for (int w = 0; w < W->size(); ++w)
                    tasks.emplace_back(tag(*W, w, l) + " mu=" + format_weight(mu), [W, w, l, mu] {
                        CheckResult c = periodicity_check(W, w, l, mu);
                        return c.ok ? std::string() : c.detail;
                    });
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

// A W_P-invariant slope, generic in the directions outside P.
Weight invariant_slope(const Parabolic& GP, std::mt19937_64& rng) {
    const WeylGroup& W = *GP.group();
    const RootSystem& rs = W.system();
    for (int attempt = 0; attempt < 200; ++attempt) {
        Weight l = sample_generic_slopes(W, 1, rng).front();
        Weight avg(l.size(), QRat(0));
        int count = 0;
        for (int u = 0; u < W.size(); ++u)
            if (GP.in_WP(u)) {
                avg = avg + W.act(u, l);
                ++count;
            }
        avg = (QRat(1) / QRat(count)) * avg;
        bool ok = GP.is_invariant(avg);
        for (const IVec& a : rs.positive_roots()) {
            const QRat p = rs.pairing(avg, a);
            if (!p.is_zero() && p.is_integer()) ok = false;
        }
        if (ok) return avg;
    }
    throw Error(ErrorCode::InvalidInput, "no invariant slope found");
}

SuiteReport suite_parabolic(const SuiteOptions& o) {
    SuiteReport rep{"parabolic", {}, {}};
    std::mt19937_64 rng(o.seed);
    std::vector<Task> tasks;
    for (const WeylPtr& W : groups(o, {"A3"})) {
        for (int s = 1; s <= W->rank(); ++s)
            tasks.emplace_back(W->system().name() + " P1 fibration s" + std::to_string(s), [W, s] {
                return fibration_check(W, s) ? std::string() : "pi_*(1 + y L*) is not 1 - y";
            });
        for (const std::vector<int>& P : maximal_parabolics(*W)) {
            auto GP = std::make_shared<Parabolic>(W, P);
            std::string pname = "P={";
            for (std::size_t k = 0; k < P.size(); ++k) pname += (k ? "," : "") + std::string("s") + std::to_string(P[k]);
            pname += "}";
            Weight l = o.slope && GP->is_invariant(*o.slope) ? *o.slope : invariant_slope(*GP, rng);
            for (int w : GP->reps())
                for (int s = 1; s <= W->rank(); ++s) {
                    const std::string id = W->system().name() + " " + pname + " w=" + W->format(w) + " s" + std::to_string(s) +
                                           " slope=" + format_weight(l);
                    tasks.emplace_back(id + " case proposition", [GP, s, w, l] {
                        LeftActionReport r = left_action_check(*GP, s, w, l);
                        return r.proposition_ok ? std::string() : r.detail;
                    });
                    tasks.emplace_back(id + " summary exponent", [GP, s, w, l] {
                        LeftActionReport r = left_action_check(*GP, s, w, l);
                        return r.summary_ok ? std::string() : r.detail;
                    });
                }
        }
    }
    rep.cases = run_tasks(tasks, o.jobs);
    return rep;
}

const std::map<std::string, SuiteReport (*)(const SuiteOptions&)>& registry() {
    static const std::map<std::string, SuiteReport (*)(const SuiteOptions&)> r = {
        {"example", suite_example},     {"quadratic", suite_quadratic}, {"braid", suite_braid},
        {"wordindep", suite_wordindep}, {"leftright", suite_leftright}, {"oracle", suite_oracle},
        {"matrix", suite_matrix},       {"lift", suite_lift},           {"wallcross", suite_wallcross},
        {"chamber", suite_chamber},     {"antiample", suite_antiample}, {"support", suite_support},
        {"periodicity", suite_periodicity}, {"parabolic", suite_parabolic},
    };
    return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"example",   "quadratic", "braid",   "wordindep", "leftright",
                                                   "oracle",    "matrix",    "lift",    "wallcross", "chamber",
                                                   "antiample", "support",   "periodicity", "parabolic"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error(ErrorCode::InvalidInput, "unknown suite '" + name + "'");
    return it->second(opt);
}

std::vector<Weight> sample_generic_slopes(const WeylGroup& W, int count, std::mt19937_64& rng) {
    const RootSystem& rs = W.system();
    std::uniform_int_distribution<long> num(-15, 15);
    std::bernoulli_distribution which(0.5);
    std::vector<Weight> out;
    while (static_cast<int>(out.size()) < count) {
        Weight l(static_cast<std::size_t>(rs.dim()));
        for (QRat& c : l) c = QRat(num(rng), which(rng) ? 7 : 11);
        if (rs.is_generic(l)) out.push_back(std::move(l));
    }
    return out;
}

IVec parse_root(const RootSystem& rs, const std::string& s) {
    if (s.size() >= 2 && (s[0] == 'a' || s[0] == 'A') && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
        const int i = std::stoi(s.substr(1));
        return rs.simple_root(i);
    }
    IVec v;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            std::size_t used = 0;
            v.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidInput, "bad root '" + s + "'");
        }
    }
    if (static_cast<int>(v.size()) != rs.dim()) throw Error(ErrorCode::RankMismatch, "root has the wrong length");
    if (!rs.is_root(v) || !rs.is_positive_root(v)) throw Error(ErrorCode::InvalidInput, "'" + s + "' is not a positive root");
    return v;
}

int resolve_jobs(int fallback) {
    if (const char* env = std::getenv("TWISTED_HECKE_JOBS")) {
        try {
            const int j = std::stoi(env);
            if (j > 0) return j;
        } catch (const std::exception&) {
        }
    }
    return std::max(fallback, 1);
}

} // namespace th
