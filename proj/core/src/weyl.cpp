#include "twisted_hecke/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>

#include "twisted_hecke/errors.hpp"

namespace th {

namespace {

constexpr long kMaxOrder = 3628800; // 10!
constexpr int kTableLimit = 720;    // full product table up to |S_6|

long expected_order(const RootSystem& rs) {
    switch (rs.kind()) {
    case RootKind::C2: return 8;
    case RootKind::G2: return 12;
    default: {
        long f = 1;
        for (int k = 2; k <= rs.dim(); ++k) f *= k;
        return f;
    }
    }
}

} // namespace

std::string WeylGroup::key(const IMat& m) {
    std::string s;
    s.reserve(m.a.size());
    for (long v : m.a) s.push_back(static_cast<char>(v));
    return s;
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
    if (expected_order(rs_) > kMaxOrder) throw Error(ErrorCode::TooLarge, "|W| exceeds 10!");
    const int r = rs_.rank();
    std::vector<IMat> simple;
    for (int i = 1; i <= r; ++i) simple.push_back(rs_.reflection(rs_.simple_root(i)));

    mats_.push_back(IMat::identity(rs_.dim()));
    nf_.push_back({});
    len_.push_back(0);
    index_.emplace(key(mats_[0]), 0);
    // BFS by right multiplication; parents are visited in ShortLex order, so
    // the first word found for each element is its ShortLex normal form.
    for (std::size_t head = 0; head < mats_.size(); ++head) {
        for (int i = 1; i <= r; ++i) {
            IMat m = mats_[head] * simple[i - 1];
            auto [it, fresh] = index_.try_emplace(key(m), static_cast<int>(mats_.size()));
            if (!fresh) continue;
            Word w = nf_[head];
            w.push_back(i);
            mats_.push_back(std::move(m));
            nf_.push_back(std::move(w));
            len_.push_back(len_[head] + 1);
        }
    }
    const int n = size();
    right_.assign(static_cast<std::size_t>(n * r), 0);
    left_.assign(static_cast<std::size_t>(n * r), 0);
    inv_.assign(n, 0);
    for (int w = 0; w < n; ++w) {
        for (int i = 1; i <= r; ++i) {
            right_[static_cast<std::size_t>(w * r + i - 1)] = index_of(mats_[w] * simple[i - 1]);
            left_[static_cast<std::size_t>(w * r + i - 1)] = index_of(simple[i - 1] * mats_[w]);
        }
        if (len_[w] > len_[longest_]) longest_ = w;
    }
    for (int w = 0; w < n; ++w) {
        int x = 0;
        const Word& word = nf_[w];
        for (auto it = word.rbegin(); it != word.rend(); ++it) x = rmul(x, *it);
        inv_[w] = x;
    }
    if (n <= kTableLimit) {
        table_.assign(static_cast<std::size_t>(n * n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) table_[static_cast<std::size_t>(u * n + v)] = index_of(mats_[u] * mats_[v]);
    }
}

std::shared_ptr<const WeylGroup> WeylGroup::make(RootSystem rs) {
    return std::make_shared<const WeylGroup>(std::move(rs));
}

int WeylGroup::index_of(const IMat& m) const {
    auto it = index_.find(key(m));
    return it == index_.end() ? -1 : it->second;
}

int WeylGroup::mul(int u, int v) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(u * size() + v)];
    int x = u;
    for (int i : nf_[v]) x = rmul(x, i);
    return x;
}

int WeylGroup::from_word(const Word& word) const {
    int x = 0;
    for (int i : word) {
        if (i < 1 || i > rank()) throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(i));
        x = rmul(x, i);
    }
    return x;
}

bool WeylGroup::is_reduced(const Word& word) const {
    return len_[from_word(word)] == static_cast<int>(word.size());
}

int WeylGroup::reflection(const IVec& root) const {
    if (!rs_.is_root(root)) throw Error(ErrorCode::InvalidInput, "not a root");
    return index_of(rs_.reflection(root));
}

std::vector<Word> WeylGroup::reduced_words(int w) const {
    std::vector<Word> out;
    if (w == 0) {
        out.push_back({});
        return out;
    }
    for (int i = 1; i <= rank(); ++i) {
        int ws = rmul(w, i);
        if (len_[ws] >= len_[w]) continue;
        for (Word& p : reduced_words(ws)) {
            p.push_back(i);
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void WeylGroup::build_bruhat() const {
    const int n = size();
    if (static_cast<long>(n) * n > 30'000'000L) throw Error(ErrorCode::TooLarge, "Bruhat table too large");
    bruhat_.assign(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> order(n);
    for (int w = 0; w < n; ++w) order[w] = w;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return len_[a] < len_[b]; });
    for (int w : order) {
        std::uint8_t* row = &bruhat_[static_cast<std::size_t>(w) * n];
        if (w == 0) {
            row[0] = 1;
            continue;
        }
        // Lifting property with a right descent s of w.
        int s = 0;
        for (int i = 1; i <= rank(); ++i)
            if (len_[rmul(w, i)] < len_[w]) { s = i; break; }
        const int ws = rmul(w, s);
        const std::uint8_t* prev = &bruhat_[static_cast<std::size_t>(ws) * n];
        for (int u = 0; u < n; ++u) {
            int us = rmul(u, s);
            row[u] = len_[us] < len_[u] ? prev[us] : prev[u];
        }
    }
}

bool WeylGroup::bruhat_leq(int u, int w) const {
    std::call_once(bruhat_once_, [this] { build_bruhat(); });
    return bruhat_[static_cast<std::size_t>(w) * size() + u] != 0;
}

int WeylGroup::inversion_count(int w) const {
    int c = 0;
    for (const IVec& a : rs_.positive_roots())
        if (!rs_.is_positive_root(act(w, a))) ++c;
    return c;
}

std::vector<int> WeylGroup::one_line(int w) const {
    if (rs_.kind() != RootKind::A) throw Error(ErrorCode::WrongType, "one-line notation needs type A");
    const IMat& m = mats_[w];
    std::vector<int> p(m.d);
    for (int j = 0; j < m.d; ++j)
        for (int i = 0; i < m.d; ++i)
            if (m(i, j) == 1) p[j] = i + 1;
    return p;
}

int WeylGroup::from_one_line(const std::vector<int>& p) const {
    const int d = rs_.dim();
    if (rs_.kind() != RootKind::A || static_cast<int>(p.size()) != d)
        throw Error(ErrorCode::InvalidInput, "not a permutation of the right size");
    IMat m{d, std::vector<long>(static_cast<std::size_t>(d * d), 0)};
    for (int j = 0; j < d; ++j) {
        if (p[j] < 1 || p[j] > d) throw Error(ErrorCode::InvalidInput, "not a permutation");
        m(p[j] - 1, j) = 1;
    }
    int w = index_of(m);
    if (w < 0) throw Error(ErrorCode::InvalidInput, "not a permutation");
    return w;
}

std::string WeylGroup::format_word(const Word& word) const {
    if (word.empty()) return "id";
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) s += ' ';
        s += 's' + std::to_string(word[k]);
    }
    return s;
}

std::string WeylGroup::format(int w) const {
    if (rs_.kind() == RootKind::A) {
        std::string s;
        for (int v : one_line(w)) {
            if (rs_.dim() >= 10 && !s.empty()) s += ',';
            s += std::to_string(v);
        }
        return s;
    }
    return format_word(nf_[w]);
}

Word WeylGroup::parse_word(std::string_view s) const {
    Word word;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        int i = std::stoi(cur);
        if (i < 1 || i > rank()) throw Error(ErrorCode::IndexOutOfRange, "letter s" + cur);
        word.push_back(i);
        cur.clear();
    };
    bool explicit_s = s.find('s') != std::string_view::npos;
    for (char c : s) {
        if (c == 's' || c == ' ' || c == ',' || c == '*') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur.push_back(c);
            if (!explicit_s) flush(); // bare digits: one letter each
        } else {
            throw Error(ErrorCode::InvalidInput, "bad word '" + std::string(s) + "'");
        }
    }
    flush();
    return word;
}

int WeylGroup::parse(std::string_view s) const {
    std::string t(s);
    if (t == "id" || t == "e" || t.empty()) return 0;
    bool digits = std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == ','; });
    if (digits && rs_.kind() == RootKind::A) {
        std::vector<int> p;
        if (t.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos <= t.size()) {
                std::size_t k = t.find(',', pos);
                if (k == std::string::npos) k = t.size();
                if (k == pos) throw Error(ErrorCode::InvalidInput, "bad one-line '" + t + "'");
                p.push_back(std::stoi(t.substr(pos, k - pos)));
                pos = k + 1;
            }
        } else {
            for (char c : t) p.push_back(c - '0');
        }
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        bool perm = static_cast<int>(p.size()) == rs_.dim();
        for (int k = 0; perm && k < rs_.dim(); ++k) perm = sorted[k] == k + 1;
        if (perm) return from_one_line(p);
    }
    Word word = parse_word(t);
    if (!is_reduced(word))
        throw Error(ErrorCode::NonReducedWord, "word '" + t + "' is not reduced");
    return from_word(word);
}

} // namespace th
