/*
   Copyright 2026 the linrel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINREL_ERRORS_HPP
#define LINREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linrel {

/// Every failure mode the library reports. The CLI maps these onto exit codes.
enum class errc {
    // field construction
    non_prime_characteristic,
    reducible_modulus,
    modulus_degree_mismatch,
    // element arithmetic
    zero_element,
    field_mismatch,
    division_by_zero,
    // polynomial operations
    zero_alpha,
    zero_beta,
    zero_gamma,
    characteristic_zero,
    // rational functions and Moebius maps
    constant_pole_collision,
    identity_map,
    zero_function,
    degenerate_mobius,
    // normal forms
    no_fixed_point_in_field,
    not_invariant,
    not_scaling_related,
    not_semiconjugate,
    // oracles
    infinite_field,
    budget_exceeded,
    // expression parsing
    syntax_error,
    division_by_zero_function,
    non_integer_exponent,
    // everything else
    invalid_argument,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime_characteristic: return "NonPrimeCharacteristic";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::modulus_degree_mismatch: return "ModulusDegreeMismatch";
        case errc::zero_element: return "ZeroElement";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::zero_alpha: return "ZeroAlpha";
        case errc::zero_beta: return "ZeroBeta";
        case errc::zero_gamma: return "ZeroGamma";
        case errc::characteristic_zero: return "CharacteristicZero";
        case errc::constant_pole_collision: return "ConstantPoleCollision";
        case errc::identity_map: return "IdentityMap";
        case errc::zero_function: return "ZeroFunction";
        case errc::degenerate_mobius: return "DegenerateMobius";
        case errc::no_fixed_point_in_field: return "NoFixedPointInField";
        case errc::not_invariant: return "NotInvariant";
        case errc::not_scaling_related: return "NotScalingRelated";
        case errc::not_semiconjugate: return "NotSemiconjugate";
        case errc::infinite_field: return "InfiniteField";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::syntax_error: return "SyntaxError";
        case errc::division_by_zero_function: return "DivisionByZeroFunction";
        case errc::non_integer_exponent: return "NonIntegerExponent";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace linrel

#endif  // LINREL_ERRORS_HPP

