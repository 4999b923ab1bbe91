/**
 * Coefficient field selection: a prime field F_p or the rationals.
 */

#ifndef LEXCM_FIELD_HPP
#define LEXCM_FIELD_HPP

#include <string>

#include "lexcm/monomial.hpp"

namespace lexcm {

struct FieldSpec {
    enum class Kind { prime, rationals };

    Kind kind = Kind::prime;
    int p = 2;

    static FieldSpec f2() { return FieldSpec{Kind::prime, 2}; }
    static FieldSpec f3() { return FieldSpec{Kind::prime, 3}; }
    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

    static bool is_prime(int q) {
        if (q < 2) return false;
        for (int k = 2; static_cast<long>(k) * k <= q; ++k)
            if (q % k == 0) return false;
        return true;
    }

    static FieldSpec prime(int q) {
        if (!is_prime(q)) throw invalid_input("field characteristic must be prime");
        return FieldSpec{Kind::prime, q};
    }

    /** Accepts a prime written in decimal, or "Q" / "q" for the rationals. */
    static FieldSpec parse(const std::string& text) {
        if (text == "Q" || text == "q") return rationals();
        try {
            std::size_t pos = 0;
            int q = std::stoi(text, &pos);
            if (pos == text.size()) return prime(q);
        } catch (const invalid_input&) {
            throw;
        } catch (const std::exception&) {
        }
        throw invalid_input("field must be a prime or 'Q', got '" + text + "'");
    }

    std::string label() const {
        return kind == Kind::rationals ? std::string("Q") : "F" + std::to_string(p);
    }

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind == Kind::rationals || p == o.p);
    }
};

}  // namespace lexcm

#endif  // LEXCM_FIELD_HPP
