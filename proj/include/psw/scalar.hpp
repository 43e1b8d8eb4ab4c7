#ifndef PSW_SCALAR_HPP
#define PSW_SCALAR_HPP

#include <gmpxx.h>

#include <string>

namespace psw {

// Exact rational scalar. mpq_class keeps numerator/denominator in lowest
// terms with a positive denominator after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline std::string to_string(const Scalar& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace psw

#endif  // PSW_SCALAR_HPP
