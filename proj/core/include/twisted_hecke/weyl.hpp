#pragma once

// Enumerated Weyl groups. Elements are dense indices into the enumeration;
// index 0 is the identity. Normal forms are ShortLex-minimal reduced words.

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "twisted_hecke/rootsys.hpp"

namespace th {

using Word = std::vector<int>; // 1-based simple reflection indices

class WeylGroup {
public:
    explicit WeylGroup(RootSystem rs);
    static std::shared_ptr<const WeylGroup> make(RootSystem rs);

    const RootSystem& system() const { return rs_; }
    int rank() const { return rs_.rank(); }
    int size() const { return static_cast<int>(mats_.size()); }
    int identity() const { return 0; }
    int longest() const { return longest_; }

    const IMat& matrix(int w) const { return mats_[w]; }
    int length(int w) const { return len_[w]; }
    const Word& normal_form(int w) const { return nf_[w]; }
    int inverse(int w) const { return inv_[w]; }
    int mul(int u, int v) const;
    // w * s_i and s_i * w
    int rmul(int w, int i) const { return right_[static_cast<std::size_t>(w * rank() + i - 1)]; }
    int lmul(int i, int w) const { return left_[static_cast<std::size_t>(w * rank() + i - 1)]; }
    int simple(int i) const { return rmul(0, i); }

    int from_word(const Word& word) const;
    bool is_reduced(const Word& word) const;
    // l(w s_i) > l(w)
    bool longer_right(int w, int i) const { return len_[rmul(w, i)] > len_[w]; }
    bool longer_left(int i, int w) const { return len_[lmul(i, w)] > len_[w]; }
    int index_of(const IMat& m) const; // -1 if absent
    // The reflection s_beta for a root beta.
    int reflection(const IVec& root) const;

    IVec act(int w, const IVec& v) const { return mats_[w] * v; }
    Weight act(int w, const Weight& v) const { return mats_[w] * v; }

    std::vector<Word> reduced_words(int w) const;
    bool bruhat_leq(int u, int w) const;
    int inversion_count(int w) const; // positive roots sent negative

    // Type A only. one_line(w)[j-1] = w(j) where w e_j = e_{w(j)}.
    std::vector<int> one_line(int w) const;
    int from_one_line(const std::vector<int>& p) const;

    // One-line notation for type A, "s1 s2 s1" words otherwise, "id" for 1.
    std::string format(int w) const;
    std::string format_word(const Word& word) const;
    // Accepts one-line ("231"), words ("s1 s2", "s1s2", "121" when not a
    // permutation), or "id"/"e".
    int parse(std::string_view s) const;
    Word parse_word(std::string_view s) const;

private:
    RootSystem rs_;
    std::vector<IMat> mats_;
    std::vector<int> len_, inv_, right_, left_;
    std::vector<Word> nf_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> table_; // full product table when small
    int longest_ = 0;

    mutable std::once_flag bruhat_once_;
    mutable std::vector<std::uint8_t> bruhat_;

    static std::string key(const IMat& m);
    void build_bruhat() const;
};

using WeylPtr = std::shared_ptr<const WeylGroup>;

} // namespace th
