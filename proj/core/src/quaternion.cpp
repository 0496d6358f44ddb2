#include "qgirth/quaternion.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "qgirth/checked.hpp"

namespace qgirth {

namespace {

// Components of the Hamilton product are sums of four signed 64x64
// products; accumulate in 128 bits, then range-check once.
std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("qgirth: 64-bit overflow in quaternion product");
    return static_cast<std::int64_t>(v);
}

std::uint64_t abs_u64(std::int64_t v) {
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

} // namespace

Quaternion mul(const Quaternion& a, const Quaternion& b) {
    const __int128 a0 = a.a0, a1 = a.a1, a2 = a.a2, a3 = a.a3;
    const __int128 b0 = b.a0, b1 = b.a1, b2 = b.a2, b3 = b.a3;
    return Quaternion{
        narrow(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3),
        narrow(a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2),
        narrow(a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1),
        narrow(a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0),
    };
}

Quaternion neg(const Quaternion& a) {
    return Quaternion{checked_neg(a.a0), checked_neg(a.a1), checked_neg(a.a2), checked_neg(a.a3)};
}

Quaternion conj(const Quaternion& a) {
    return Quaternion{a.a0, checked_neg(a.a1), checked_neg(a.a2), checked_neg(a.a3)};
}

std::int64_t norm(const Quaternion& a) {
    const __int128 n = static_cast<__int128>(a.a0) * a.a0 + static_cast<__int128>(a.a1) * a.a1 +
                       static_cast<__int128>(a.a2) * a.a2 + static_cast<__int128>(a.a3) * a.a3;
    return narrow(n);
}

std::int64_t content(const Quaternion& a) {
    std::uint64_t g = std::gcd(std::gcd(abs_u64(a.a0), abs_u64(a.a1)),
                               std::gcd(abs_u64(a.a2), abs_u64(a.a3)));
    return static_cast<std::int64_t>(g);
}

const std::array<Quaternion, 8>& units() {
    static const std::array<Quaternion, 8> u = {{
        {1, 0, 0, 0}, {-1, 0, 0, 0},
        {0, 1, 0, 0}, {0, -1, 0, 0},
        {0, 0, 1, 0}, {0, 0, -1, 0},
        {0, 0, 0, 1}, {0, 0, 0, -1},
    }};
    return u;
}

bool is_unit(const Quaternion& a) {
    const auto& u = units();
    return std::find(u.begin(), u.end(), a) != u.end();
}

std::vector<Quaternion> unit_orbit(const Quaternion& a) {
    std::vector<Quaternion> orbit;
    orbit.reserve(8);
    for (const auto& e : units()) orbit.push_back(mul(e, a));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

std::string to_string(const Quaternion& a) {
    std::string s = std::to_string(a.a0);
    auto append = [&s](std::int64_t v, char sym) {
        if (v < 0) {
            s += '-';
            s += std::to_string(~static_cast<std::uint64_t>(v) + 1);
        } else {
            s += '+';
            s += std::to_string(v);
        }
        s += sym;
    };
    append(a.a1, 'i');
    append(a.a2, 'j');
    append(a.a3, 'k');
    return s;
}

Quaternion parse_quaternion(const std::string& text) {
    size_t pos = 0;
    auto fail = [&text]() -> void {
        throw std::invalid_argument("qgirth: cannot parse quaternion '" + text + "'");
    };
    auto skip_ws = [&]() { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto read_int = [&]() -> std::int64_t {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) { ++pos; ++digits; }
        if (digits == 0) fail();
        try {
            return std::stoll(text.substr(start, pos - start));
        } catch (const std::exception&) {
            fail();
        }
        return 0;
    };
    Quaternion q;
    q.a0 = read_int();
    std::int64_t* comps[3] = {&q.a1, &q.a2, &q.a3};
    const char syms[3] = {'i', 'j', 'k'};
    for (int c = 0; c < 3; ++c) {
        *comps[c] = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != syms[c]) fail();
        ++pos;
    }
    skip_ws();
    if (pos != text.size()) fail();
    return q;
}

} // namespace qgirth
