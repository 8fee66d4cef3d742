#ifndef MJB_MJB_HPP
#define MJB_MJB_HPP

#include "mjb/bases.hpp"
#include "mjb/bernstein_to_jacobi.hpp"
#include "mjb/coefficients.hpp"
#include "mjb/degree_reduction.hpp"
#include "mjb/indexed_matrix.hpp"
#include "mjb/io.hpp"
#include "mjb/jacobi_to_bernstein.hpp"
#include "mjb/params.hpp"
#include "mjb/specialfn.hpp"

#endif  // MJB_MJB_HPP
