#include "twisted_hecke/serialize.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace th {

namespace {

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t k = s.find(sep, pos);
        out.push_back(s.substr(pos, k == std::string_view::npos ? std::string_view::npos : k - pos));
        if (k == std::string_view::npos) break;
        pos = k + sep.size();
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

Term parse_term(std::string_view s) {
    auto parts = split(trim(s), "*");
    Term t{Monomial(), QRat::parse(parts[0])};
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto caret = parts[i].find('^');
        if (caret == std::string_view::npos) throw Error(ErrorCode::InvalidInput, "bad factor " + std::string(parts[i]));
        VarId v = VarId::parse(parts[i].substr(0, caret));
        QRat e = QRat::parse(parts[i].substr(caret + 1));
        if (!e.is_integer()) throw Error(ErrorCode::InvalidInput, "non-integer exponent");
        t.mono[v.slot()] = static_cast<Monomial::Exp>(t.mono[v.slot()] + e.to_long());
    }
    return t;
}

} // namespace

LaurentPoly parse_laurent(std::string_view s) {
    s = trim(s);
    if (s == "0") return {};
    std::vector<Term> terms;
    try {
        for (auto part : split(s, " + ")) terms.push_back(parse_term(part));
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::InvalidInput, e.what());
    }
    return LaurentPoly::from_terms(std::move(terms));
}

RatFunc parse_ratfunc(std::string_view s) {
    auto parts = split(s, " / ");
    if (parts.size() == 1) return RatFunc(parse_laurent(parts[0]));
    if (parts.size() != 2) throw Error(ErrorCode::InvalidInput, "more than one ' / '");
    return RatFunc::fraction(parse_laurent(parts[0]), parse_laurent(parts[1]));
}

std::string ratfunc_to_json(const RatFunc& f) {
    LaurentPoly den = f.den();
    std::set<int> used;
    for (const LaurentPoly* p : {&f.num(), static_cast<const LaurentPoly*>(&den)})
        for (const Term& t : p->terms())
            for (int s = 0; s < kSlots; ++s)
                if (t.mono[s]) used.insert(s);
    nlohmann::json j;
    j["vars"] = nlohmann::json::array();
    for (int s : used) j["vars"].push_back(VarId::from_slot(s).name());
    auto encode = [&](const LaurentPoly& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = p.size(); i-- > 0;) {
            const Term& t = p.terms()[i];
            nlohmann::json exps = nlohmann::json::array();
            for (int s : used) exps.push_back(t.mono[s]);
            arr.push_back(nlohmann::json::array({t.coeff.str(), exps}));
        }
        return arr;
    };
    j["num"] = encode(f.num());
    j["den"] = encode(den);
    return j.dump();
}

RatFunc ratfunc_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, e.what());
    }
    std::vector<int> slots;
    for (const auto& v : j.at("vars")) slots.push_back(VarId::parse(v.get<std::string>()).slot());
    auto decode = [&](const nlohmann::json& arr) {
        std::vector<Term> terms;
        for (const auto& item : arr) {
            Term t{Monomial(), QRat::parse(item.at(0).get<std::string>())};
            const auto& exps = item.at(1);
            if (exps.size() != slots.size()) throw Error(ErrorCode::InvalidInput, "exponent arity");
            for (std::size_t k = 0; k < slots.size(); ++k)
                t.mono[slots[k]] = static_cast<Monomial::Exp>(exps[k].get<int>());
            terms.push_back(std::move(t));
        }
        return LaurentPoly::from_terms(std::move(terms));
    };
    LaurentPoly num = decode(j.at("num"));
    LaurentPoly den = decode(j.at("den"));
    return RatFunc::fraction(num, den);
}

} // namespace th
