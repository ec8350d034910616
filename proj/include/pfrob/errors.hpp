#pragma once

#include <stdexcept>
#include <string>

namespace pfrob {

/* Error taxonomy.
 *
 * domain_error        invalid input (bad generators, out-of-range index,
 *                     malformed element, unsupported weight)
 * coprimality_error   gcd of the generators is not 1
 * precondition_error  input is well-formed but a formula's precondition
 *                     fails (e.g. the weight is a root of unity where the
 *                     general path needs it not to be)
 * zero_divisor_error  inversion hit a non-unit in Q[x]/(f)
 * division_by_zero    inversion of zero
 * parse_error         unreadable textual input (weight grammar, numbers)
 * consistency_error   internal cross-check failed; indicates a bug, not
 *                     bad input (e.g. a closed form produced a non-integer
 *                     where an integer is guaranteed)
 */

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct domain_error : error {
  using error::error;
};

struct coprimality_error : domain_error {
  using domain_error::domain_error;
};

struct precondition_error : domain_error {
  using domain_error::domain_error;
};

struct zero_divisor_error : domain_error {
  using domain_error::domain_error;
};

struct division_by_zero : domain_error {
  using domain_error::domain_error;
};

struct parse_error : error {
  using error::error;
};

struct consistency_error : error {
  using error::error;
};

}  // namespace pfrob
