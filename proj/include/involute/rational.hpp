#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

#include "involute/errors.hpp"

namespace involute {

using Rational = mpq_class;

// Accepts integer and a/b literals, base 10. Canonicalizes the result so
// equal values compare equal.
inline Rational rational_from_string(std::string_view text) {
    try {
        Rational q(std::string(text), 10);
        if (q.get_den() == 0)
            throw Error("zero denominator in rational literal: " + std::string(text));
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: " + std::string(text));
    }
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace involute
