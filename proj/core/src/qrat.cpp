#include "twisted_hecke/qrat.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace th {

QRat::QRat(long num, long den) {
    if (den == 0) throw std::domain_error("QRat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

QRat QRat::parse(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t') t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty rational");
    std::size_t slash = t.find('/');
    auto is_int = [](const std::string& x) {
        std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
        if (i == x.size()) return false;
        for (; i < x.size(); ++i)
            if (x[i] < '0' || x[i] > '9') return false;
        return true;
    };
    std::string n = t.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!is_int(n) || !is_int(d) || d[0] == '-' || d[0] == '+')
        throw std::invalid_argument("not a rational: " + std::string(s));
    if (n[0] == '+') n.erase(0, 1);
    mpz_class zn(n), zd(d);
    if (zd == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    QRat r;
    r.v_ = mpq_class(zn, zd);
    r.v_.canonicalize();
    return r;
}

long QRat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::range_error("QRat::to_long: not a machine integer");
    return v_.get_num().get_si();
}

QRat& QRat::operator/=(const QRat& o) {
    if (o.is_zero()) throw std::domain_error("QRat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::size_t QRat::hash() const {
    std::size_t h = 0;
    auto mix = [&h](const mpz_class& z) {
        std::size_t n = mpz_size(z.get_mpz_t());
        h = h * 1000003u ^ std::hash<long>{}(mpz_sgn(z.get_mpz_t()));
        for (std::size_t i = 0; i < n; ++i)
            h = h * 1000003u ^ std::hash<mp_limb_t>{}(mpz_getlimbn(z.get_mpz_t(), i));
    };
    mix(v_.get_num());
    mix(v_.get_den());
    return h;
}

long ceil_q(const QRat& a) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), a.raw().get_num_mpz_t(), a.raw().get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::range_error("ceil_q overflow");
    return q.get_si();
}

long floor_q(const QRat& a) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.raw().get_num_mpz_t(), a.raw().get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::range_error("floor_q overflow");
    return q.get_si();
}

bool rational_sqrt(const QRat& a, QRat& d) {
    if (a.sign() < 0) return false;
    mpz_class n = a.num(), m = a.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(m.get_mpz_t()))
        return false;
    mpz_class rn, rm;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rm.get_mpz_t(), m.get_mpz_t());
    d = QRat(mpq_class(rn, rm));
    return true;
}

std::ostream& operator<<(std::ostream& os, const QRat& q) { return os << q.str(); }

} // namespace th
