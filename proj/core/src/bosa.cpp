#include "twisted_hecke/bosa.hpp"

#include "twisted_hecke/errors.hpp"

namespace th {

namespace {

void check_word(const WeylGroup& W, const Word& word) {
    for (int i : word)
        if (i < 1 || i > W.rank()) throw Error(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(i));
    if (!W.is_reduced(word)) throw Error(ErrorCode::NonReducedWord, "word " + W.format_word(word) + " is not reduced");
}

void check_type_a(const WeylGroup& W) {
    if (W.system().kind() != RootKind::A) throw Error(ErrorCode::WrongType, "matrix Schubert data needs type A");
}

// w_{>j} = s_{i_{j+1}} ... s_{i_l}, for j = 0..l-1 (0-based position j)
std::vector<int> tails(const WeylGroup& W, const Word& word) {
    std::vector<int> out(word.size());
    int v = W.identity();
    for (std::size_t j = word.size(); j-- > 0;) {
        out[j] = v;
        v = W.lmul(word[j], v);
    }
    return out;
}

int inv_at(const WeylGroup& W, int w, int k) { return W.one_line(W.inverse(w))[static_cast<std::size_t>(k - 1)]; }

RatFunc xt(int xi, int ti) { return RatFunc::monomial(Monomial::var(x_(xi)) / Monomial::var(t_(ti))); }

} // namespace

std::vector<BinarySeq> all_sequences(int l) {
    std::vector<BinarySeq> out;
    const std::size_t count = std::size_t{1} << l;
    for (std::size_t m = 0; m < count; ++m) {
        BinarySeq e(static_cast<std::size_t>(l));
        for (int j = 0; j < l; ++j) e[static_cast<std::size_t>(j)] = (m >> (l - 1 - j)) & 1u;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ChevalleyTerm> chevalley_coeffs(const WeylGroup& W, const Word& word, const Weight& lambda) {
    check_word(W, word);
    W.system().check_weight(lambda);
    const std::vector<int> tl = tails(W, word);
    std::vector<ChevalleyTerm> out;
    for (std::size_t j = 0; j < word.size(); ++j) {
        ChevalleyTerm c;
        c.gamma = W.act(W.inverse(tl[j]), W.system().simple_root(word[j]));
        c.coeff = W.system().pairing(lambda, c.gamma);
        c.coeff_moved = W.system().pairing(W.act(tl[j], lambda), word[j]);
        out.push_back(std::move(c));
    }
    return out;
}

int image_point(const WeylGroup& W, const Word& word, const BinarySeq& eps) {
    int p = W.identity();
    for (std::size_t j = 0; j < word.size(); ++j)
        if (eps[j]) p = W.rmul(p, word[j]);
    return p;
}

std::map<BinarySeq, RatFunc> bs_restrictions(const WeylGroup& W, const Word& word, const Weight& lambda) {
    check_word(W, word);
    const std::vector<Weight> mu = right_slopes(W, word, lambda);
    const RatFunc y = y_var();
    std::map<BinarySeq, RatFunc> out;
    for (const BinarySeq& eps : all_sequences(static_cast<int>(word.size()))) {
        int p = W.identity();
        RatFunc v(1);
        for (std::size_t j = 0; j < word.size(); ++j) {
            const int s = word[j];
            if (eps[j]) {
                p = W.rmul(p, s);
                const Monomial Li = line_L(W, s, p).inverse();
                v *= one_plus(y, Li) / one_minus(Li);
            } else {
                const long c = ceil_q(-W.system().pairing(mu[j], s));
                const Monomial L = line_L(W, s, p);
                v *= (RatFunc(1) + y) * RatFunc::monomial(L.pow(static_cast<int>(c - 1))) / one_minus(L.inverse());
            }
        }
        out.emplace(eps, std::move(v));
    }
    return out;
}

LocalizedClass mc_via_lrr(const WeylPtr& W, const Word& word, const Weight& lambda) {
    std::map<BinarySeq, RatFunc> local = bs_restrictions(*W, word, lambda);
    std::vector<RatFunc> sums(static_cast<std::size_t>(W->size()));
    for (const auto& [eps, v] : local) sums[static_cast<std::size_t>(image_point(*W, word, eps))] += v;
    LocalizedClass out(W);
    const RootSystem& rs = W->system();
    for (int sigma = 0; sigma < W->size(); ++sigma) {
        RatFunc f = sums[static_cast<std::size_t>(sigma)];
        if (f.is_zero()) continue;
        for (const IVec& a : rs.positive_roots()) f *= one_minus(rs.exp_monomial(W->act(sigma, a), Family::t));
        out[sigma] = f;
    }
    return out;
}

int letter_multiplicity(const WeylGroup& W, const Word& word, int j, int k) {
    check_type_a(W);
    const std::vector<int> tl = tails(W, word);
    const int v = tl[static_cast<std::size_t>(j - 1)];
    const int i = word[static_cast<std::size_t>(j - 1)];
    const int lo = inv_at(W, v, i), hi = inv_at(W, v, i + 1);
    return (lo <= k && k < hi) ? 1 : 0;
}

MultiplicityTable matrix_multiplicities(const WeylGroup& W, const Word& word, Resolution side, const Weight& lambda) {
    check_type_a(W);
    check_word(W, word);
    W.system().check_weight(lambda);
    const int n = W.system().dim();
    const std::vector<int> tl = tails(W, word);
    auto lam = [&](int k) { return k > n ? QRat(0) : lambda[static_cast<std::size_t>(k - 1)]; };
    MultiplicityTable t;
    // d_{B,j} occurs in M_{w,k} exactly for k >= j on the left resolution;
    // the right resolution sees the slope moved by w
    const Weight base = side == Resolution::Left ? lambda : W.act(W.from_word(word), lambda);
    for (int j = 1; j <= n; ++j) {
        QRat c(0);
        for (int k = j; k <= n; ++k)
            c += base[static_cast<std::size_t>(k - 1)] - (k < n ? base[static_cast<std::size_t>(k)] : QRat(0));
        t.boundary_B.push_back(c);
    }
    for (int j = 1; j <= static_cast<int>(word.size()); ++j) {
        QRat c(0);
        for (int k = 1; k <= n; ++k)
            if (letter_multiplicity(W, word, j, k)) c += lam(k) - lam(k + 1);
        t.letters.push_back(c);
        t.pairings.push_back(
            W.system().pairing(W.act(tl[static_cast<std::size_t>(j - 1)], lambda), word[static_cast<std::size_t>(j - 1)]));
    }
    return t;
}

RatFunc matrix_closed_formula(const WeylGroup& W, const Word& word, const Weight& lambda, const BinarySeq& eps,
                              ClosedFormula variant) {
    check_type_a(W);
    check_word(W, word);
    W.system().check_weight(lambda);
    if (eps.size() != word.size()) throw Error(ErrorCode::RankMismatch, "sequence length differs from word length");
    const int n = W.system().dim();
    const RatFunc y = y_var();

    RatFunc base(1);
    for (int j = 1; j <= n; ++j) {
        base *= (RatFunc(1) + y) * xt(j, j).pow(static_cast<int>(1 - ceil_q(lambda[static_cast<std::size_t>(j - 1)])));
        if (variant == ClosedFormula::Corrected) base /= RatFunc(1) - xt(j, j);
        for (int i = 1; i < j; ++i) base *= (RatFunc(1) + y * xt(j, i)) / (RatFunc(1) - xt(j, i));
    }

    const std::vector<int> tl = tails(W, word);
    RatFunc psi_prod(1);
    int prefix = W.identity(); // w^eps_{<j}
    for (std::size_t j = 0; j < word.size(); ++j) {
        const int i = word[j];
        const Monomial r = Monomial::var(t_(i)) / Monomial::var(t_(i + 1));
        RatFunc psi;
        if (eps[j]) {
            psi = one_plus(y, r.inverse()) / one_minus(r.inverse());
        } else {
            const QRat a = lambda[static_cast<std::size_t>(inv_at(W, tl[j], i) - 1)] -
                           lambda[static_cast<std::size_t>(inv_at(W, tl[j], i + 1) - 1)];
            psi = (RatFunc(1) + y) * RatFunc::monomial(r.pow(static_cast<int>(1 - ceil_q(a)))) / one_minus(r);
        }
        psi_prod *= act_family(W, prefix, Family::t, psi);
        if (eps[j]) prefix = W.rmul(prefix, i);
    }
    return act_family(W, prefix, Family::t, base) * psi_prod;
}

RatFunc matrix_closed_sum(const WeylGroup& W, const Word& word, const Weight& lambda, ClosedFormula variant) {
    const int n = W.system().dim();
    RatFunc sum;
    for (const BinarySeq& eps : all_sequences(static_cast<int>(word.size())))
        sum += matrix_closed_formula(W, word, lambda, eps, variant);
    RatFunc E(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) E *= RatFunc(1) - xt(j, i);
    return sum * E;
}

} // namespace th
