#ifndef MJB_SRC_WIDE_HPP
#define MJB_SRC_WIDE_HPP

namespace mjb::detail {

// Accumulator for the terminating hypergeometric sums. Their terms
// alternate in sign and can exceed the result by many orders of magnitude,
// so the sums are carried in quad precision where the compiler provides it.
#if defined(__SIZEOF_FLOAT128__) && !defined(MJB_NO_FLOAT128)
using Wide = __float128;
#else
using Wide = long double;
#endif

}  // namespace mjb::detail

#endif  // MJB_SRC_WIDE_HPP
