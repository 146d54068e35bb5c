#pragma once

// Exact integer Laurent polynomials in one variable t.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace kfc {

class LaurentPoly {
public:
    LaurentPoly() = default;

    void addTerm(int exponent, std::int64_t coeff) {
        if (coeff == 0) return;
        auto it = coeffs_.find(exponent);
        if (it == coeffs_.end()) {
            coeffs_.emplace(exponent, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::int64_t coeff(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? 0 : it->second;
    }

    const std::map<int, std::int64_t>& terms() const { return coeffs_; }

    bool operator==(const LaurentPoly&) const = default;

    /// Renders highest exponent first, e.g. "t^3 - 1 + t^-3".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            auto [e, c] = *it;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::int64_t a = c < 0 ? -c : c;
            if (e == 0) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, std::int64_t> coeffs_;
};

}  // namespace kfc
