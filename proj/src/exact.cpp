#include "codedens/exact.hpp"

#include <cctype>
#include <limits>

namespace codedens {

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

BigInt pow(std::uint64_t base, unsigned long exponent) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

BigRat pow_rat(const BigRat& base, long exponent) {
    if (exponent >= 0) {
        return make_rat(pow(base.get_num(), static_cast<unsigned long>(exponent)),
                        pow(base.get_den(), static_cast<unsigned long>(exponent)));
    }
    if (base == 0) throw InvalidArgument("zero to a negative power");
    auto e = static_cast<unsigned long>(-exponent);
    return make_rat(pow(base.get_den(), e), pow(base.get_num(), e));
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw InvalidArgument("division by zero");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw InvalidArgument("division by zero");
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt floor(const BigRat& x) { return floor_div(x.get_num(), x.get_den()); }
BigInt ceil(const BigRat& x) { return ceil_div(x.get_num(), x.get_den()); }

std::string to_string(const BigRat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal(const BigRat& x, int digits) {
    if (digits < 0) throw InvalidArgument("negative digit count");
    BigInt scale = pow(BigInt(10), static_cast<unsigned long>(digits));
    BigInt num = x.get_num();
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scaled = num * scale / x.get_den();
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty integer");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw InvalidArgument("malformed integer: " + std::string(text));
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw InvalidArgument("malformed integer: " + std::string(text));
        }
    }
    std::string s(text[0] == '+' ? text.substr(1) : text);
    return BigInt(s, 10);
}

BigRat parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw InvalidArgument("zero denominator: " + std::string(text));
        return make_rat(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        std::string digits = std::string(negative ? whole.substr(1) : whole) + std::string(frac);
        if (digits.empty()) throw InvalidArgument("malformed decimal: " + std::string(text));
        BigInt num = parse_integer(digits);
        if (negative) num = -num;
        return make_rat(num, pow(BigInt(10), frac.size()));
    }
    return BigRat(parse_integer(text));
}

bool fits_u64(const BigInt& x) {
    return x >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& x) {
    if (!fits_u64(x)) throw InvalidArgument("value does not fit in 64 bits: " + x.get_str());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
    return out;
}

long to_long(const BigInt& x) {
    if (!x.fits_slong_p()) throw InvalidArgument("value does not fit in a long: " + x.get_str());
    return x.get_si();
}

}  // namespace codedens
