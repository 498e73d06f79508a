#pragma once

#include <string_view>

// Hand transcriptions of the published low-order equations, in the text
// format accepted by diffalg::parse_text. Kept apart from the generators so
// they can serve as independent ground truth.
namespace maxsym::cli::reference {

// Normal-form operators in terms of r.
inline constexpr std::string_view kPhi3 =
    "-y*(r'^3 - 2*r*r'*r'' + r^2*r''')/r^3 + y'*(r'^2 - 2*r*r'')/r^2 + y'''";
inline constexpr std::string_view kPhi4 =
    "3*y*(27*r'^4 - 68*r*r'^2*r'' + 24*r^2*r'*r''' + 4*r^2*(7*r''^2 - 2*r*r^(4)))/(16*r^4)"
    " - 5*y'*(r'^3 - 2*r*r'*r'' + r^2*r''')/r^3 + 5*(r'^2 - 2*r*r'')*y''/(2*r^2) + y^(4)";

// The same operators after elimination in favour of q.
inline constexpr std::string_view kTheta3 = "2*q'*y + 4*q*y' + y'''";
inline constexpr std::string_view kTheta4 = "3*y*(3*q^2 + q'') + 10*y'*q' + 10*q*y'' + y^(4)";

}  // namespace maxsym::cli::reference
