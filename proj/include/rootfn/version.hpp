/*!
  \file version.hpp
  \brief Library version
*/

#pragma once

namespace rootfn
{

inline constexpr const char* version = "0.1.0";

} // namespace rootfn
