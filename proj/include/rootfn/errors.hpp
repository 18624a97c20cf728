/*!
  \file errors.hpp
  \brief Error types shared across the library
*/

#pragma once

#include <stdexcept>
#include <string>

namespace rootfn
{

/*! \brief Raised when an operation would exceed its resource guard.

  Callers can distinguish guard refusals (retry with smaller input) from
  contract violations, which surface as std::invalid_argument.
*/
class resource_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace rootfn
