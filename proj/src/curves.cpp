#include "tau/curves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tau {

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    if (n < 2) return n;
    // Start from a power of two >= sqrt(n); the iteration is then monotone
    // decreasing and lands on the floor.
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Int x = Int(1) << ((bits + 1) / 2);
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    if (x * x > n || (x + 1) * (x + 1) <= n) throw std::logic_error("isqrt: floor postcondition violated");
    return x;
}

Int CurveInstance::rhs(const Int& x) const {
    if (d < 2) throw std::invalid_argument("CurveInstance: d must be at least 2");
    if (sign != 1 && sign != -1) throw std::invalid_argument("CurveInstance: sign must be +1 or -1");
    if (family == CurveFamily::H) return 5 * int_pow(x, 2 * d) + sign * 4 * Int(ell);
    return int_pow(x, 2 * d - 1) + sign * Int(ell);
}

std::string CurveInstance::name() const {
    std::ostringstream out;
    out << (family == CurveFamily::H ? "H" : "C") << (sign > 0 ? "+" : "-") << "_{" << d << "," << ell << "}";
    return out.str();
}

std::vector<IntegerPoint> search_curve(const CurveInstance& instance, const Int& bound) {
    if (bound < 1) throw std::invalid_argument("search_curve: bound must be positive");
    std::vector<IntegerPoint> points;
    for (Int x = -bound; x <= bound; ++x) {
        const Int rhs = instance.rhs(x);
        if (rhs < 0) continue;  // no real points on this fiber
        const Int y = isqrt(rhs);
        if (y * y != rhs) continue;
        points.push_back({x, -y});
        if (y != 0) points.push_back({x, y});
    }
    std::sort(points.begin(), points.end());
    for (const IntegerPoint& pt : points) {
        if (pt.y * pt.y != instance.rhs(pt.x)) throw std::logic_error("search_curve: emitted point fails the equation");
    }
    return points;
}

const std::array<Int, 12>& thue11_coefficients() {
    static const std::array<Int, 12> coeffs = {
        Int("991077174272090396"),                  // x^11
        Int("119700018439220789119"),               // x^10 y
        Int("-8831599221002836172345"),             // x^9 y^2
        Int("-337116345512786456280840"),           // x^8 y^3
        Int("8492967300375371034332430"),           // x^7 y^4
        Int("175189311986919278870504298"),         // x^6 y^5
        Int("-1881807368163995585644810248"),       // x^5 y^6
        Int("-22992541672786450593030038430"),      // x^4 y^7
        Int("104772541553739359102253613965"),      // x^3 y^8
        Int("697875798749922445133117312720"),      // x^2 y^9
        Int("-1068801486169809452619368218519"),    // x y^10
        Int("-2292300374810647823111384294421"),    // y^11
    };
    return coeffs;
}

const Int& thue11_rhs() {
    static const Int rhs = 2 * int_pow(5, 55);
    return rhs;
}

Int thue11_evaluate(const Int& x, const Int& y) {
    // Horner in y over coefficients pre-multiplied by the x powers.
    const auto& a = thue11_coefficients();
    Int value = a[11];
    for (int j = 10; j >= 0; --j) value = value * y + a[static_cast<std::size_t>(j)] * int_pow(x, 11 - j);
    return value;
}

CheckReport check_embedded_thue11(uint64_t box) {
    if (box == 0) throw std::invalid_argument("check_embedded_thue11: box must be positive");
    Stopwatch timer;
    CheckReport report;
    report.name = "embedded-thue-degree-11";
    report.params["box"] = std::to_string(box);
    const auto& a = thue11_coefficients();
    const Int& target = thue11_rhs();
    const Int b(box);
    std::array<Int, 12> scaled;  // scaled[j] = a[j] * x^{11-j}
    for (Int x = -b; x <= b; ++x) {
        Int xp = 1;
        for (int j = 11; j >= 0; --j) {
            scaled[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] * xp;
            xp *= x;
        }
        for (Int y = -b; y <= b; ++y) {
            Int value = scaled[11];
            for (int j = 10; j >= 0; --j) value = value * y + scaled[static_cast<std::size_t>(j)];
            if (value == target) {
                Witness w;
                w["x"] = x.get_str();
                w["y"] = y.get_str();
                w["value"] = value.get_str();
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

}  // namespace tau
