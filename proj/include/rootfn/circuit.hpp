/*!
  \file circuit.hpp
  \brief Two-level AND-OR circuits and single stuck-at fault simulation

  A circuit realises a sum-of-products cover directly: one AND gate per
  cube, one OR gate collecting all AND outputs.  Each input variable has one
  stem that fans out into branches, one per gate that uses the variable.

  Fault sites:

  - `stem:<i>=<v>`       input x_i stuck at v, affecting every branch;
  - `branch:<g>,<i>=<v>` the branch of x_i feeding gate g stuck at v;
  - `orin:<g>=<v>`       the OR input driven by gate g stuck at v;
  - `orout=<v>`          the OR output stuck at v.

  Gates are numbered from 0 in cover order; variables are 1-based.  A stuck
  literal at value 1 simply disappears from its gate (the cube grows); at
  value 0 it forces the gate to constant 0 (the cube dies).  A branch fault
  overrides a stem fault on that one branch.
*/

#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cube.hpp"
#include "io.hpp"
#include "sop.hpp"
#include "truth_table.hpp"

namespace rootfn
{

/*! \brief An AND-OR realisation of a cover; gates[g] is the cube of AND gate g. */
struct two_level_circuit
{
  uint32_t num_vars;
  std::vector<cube> gates;
};

/*! \brief Builds the circuit for a cover, keeping the term order. */
inline two_level_circuit build_circuit( const sop_cover& cover )
{
  for ( const auto& term : cover.terms )
  {
    if ( term.num_vars != cover.num_vars )
    {
      throw std::invalid_argument( "build_circuit: term arity differs from cover arity" );
    }
  }
  return two_level_circuit{ cover.num_vars, cover.terms };
}

/*! \brief The function computed with no faults present. */
inline truth_table fault_free_function( const two_level_circuit& c )
{
  return cover_function( sop_cover{ c.num_vars, c.gates } );
}

/*! \brief One place where a single stuck-at fault can live. */
struct fault_site
{
  enum class kind_t : uint8_t
  {
    stem,     /*!< input stem of a variable */
    branch,   /*!< one branch of a variable into one gate */
    or_input, /*!< the OR input driven by one gate */
    or_output /*!< the circuit output */
  };

  kind_t kind;
  uint32_t gate; /*!< gate index for branch / or_input, otherwise 0 */
  uint32_t var;  /*!< 1-based variable for stem / branch, otherwise 0 */

  auto operator<=>( const fault_site& ) const = default;
};

/*! \brief A set of simultaneous stuck-at faults: site -> stuck value. */
using fault_assignment = std::map<fault_site, bool>;

/*! \brief Every fault site of the circuit, in a fixed order.

  Stems come first (by variable), then branches (by gate, then variable),
  then OR inputs (by gate), then the OR output.
*/
inline std::vector<fault_site> fault_sites( const two_level_circuit& c )
{
  std::vector<fault_site> sites;
  for ( uint32_t i = 1u; i <= c.num_vars; ++i )
  {
    sites.push_back( { fault_site::kind_t::stem, 0u, i } );
  }
  for ( uint32_t g = 0u; g < c.gates.size(); ++g )
  {
    for ( uint32_t i = 1u; i <= c.num_vars; ++i )
    {
      if ( ( c.gates[g].care >> ( i - 1u ) ) & 1u )
      {
        sites.push_back( { fault_site::kind_t::branch, g, i } );
      }
    }
  }
  for ( uint32_t g = 0u; g < c.gates.size(); ++g )
  {
    sites.push_back( { fault_site::kind_t::or_input, g, 0u } );
  }
  sites.push_back( { fault_site::kind_t::or_output, 0u, 0u } );
  return sites;
}

namespace detail
{

inline void check_site( const two_level_circuit& c, const fault_site& site )
{
  switch ( site.kind )
  {
  case fault_site::kind_t::stem:
    if ( site.var == 0u || site.var > c.num_vars )
    {
      throw std::invalid_argument( "simulate: stem fault on unknown variable" );
    }
    break;
  case fault_site::kind_t::branch:
    if ( site.gate >= c.gates.size() )
    {
      throw std::invalid_argument( "simulate: branch fault on unknown gate" );
    }
    if ( site.var == 0u || site.var > c.num_vars ||
         !( ( c.gates[site.gate].care >> ( site.var - 1u ) ) & 1u ) )
    {
      throw std::invalid_argument( "simulate: branch fault on a literal the gate does not use" );
    }
    break;
  case fault_site::kind_t::or_input:
    if ( site.gate >= c.gates.size() )
    {
      throw std::invalid_argument( "simulate: OR-input fault on unknown gate" );
    }
    break;
  case fault_site::kind_t::or_output:
    break;
  }
}

} // namespace detail

/*! \brief The function computed under a set of simultaneous stuck-at faults.

  Per gate, a stuck literal evaluating to 1 drops out (the cube loses the
  literal); evaluating to 0 it kills the gate.  A stem fault acts on every
  branch of its variable that has no branch fault of its own.  OR-input
  faults kill a gate (0) or force output 1; an output fault wins over
  everything.
*/
inline truth_table simulate( const two_level_circuit& c, const fault_assignment& faults )
{
  for ( const auto& [site, value] : faults )
  {
    detail::check_site( c, site );
  }

  const auto orout = faults.find( { fault_site::kind_t::or_output, 0u, 0u } );
  if ( orout != faults.end() )
  {
    return truth_table::constant( c.num_vars, orout->second );
  }

  for ( uint32_t g = 0u; g < c.gates.size(); ++g )
  {
    const auto orin = faults.find( { fault_site::kind_t::or_input, g, 0u } );
    if ( orin != faults.end() && orin->second )
    {
      return truth_table::constant( c.num_vars, true );
    }
  }

  truth_table out( c.num_vars );
  for ( uint32_t g = 0u; g < c.gates.size(); ++g )
  {
    const auto orin = faults.find( { fault_site::kind_t::or_input, g, 0u } );
    if ( orin != faults.end() && !orin->second )
    {
      continue; /* gate output stuck at 0 */
    }

    auto care = c.gates[g].care;
    auto bits = c.gates[g].bits;
    bool killed = false;
    for ( uint32_t i = 1u; i <= c.num_vars && !killed; ++i )
    {
      const auto mask = uint64_t( 1 ) << ( i - 1u );
      if ( !( care & mask ) )
      {
        continue;
      }
      bool stuck = false;
      bool stuck_value = false;
      const auto branch = faults.find( { fault_site::kind_t::branch, g, i } );
      if ( branch != faults.end() )
      {
        stuck = true;
        stuck_value = branch->second;
      }
      else
      {
        const auto stem = faults.find( { fault_site::kind_t::stem, 0u, i } );
        if ( stem != faults.end() )
        {
          stuck = true;
          stuck_value = stem->second;
        }
      }
      if ( !stuck )
      {
        continue;
      }
      /* literal value under the stuck input: matches polarity -> literal 1 */
      const auto literal_one = ( ( bits & mask ) != 0u ) == stuck_value;
      if ( literal_one )
      {
        care &= ~mask;
        bits &= ~mask;
      }
      else
      {
        killed = true;
      }
    }
    if ( !killed )
    {
      out |= cube_function( cube( c.num_vars, care, bits ) );
    }
  }
  return out;
}

/*! \brief Text form of one fault, e.g. `branch:2,3=1` or `orout=0`. */
inline std::string format_fault( const fault_site& site, bool value )
{
  const auto v = std::string( value ? "=1" : "=0" );
  switch ( site.kind )
  {
  case fault_site::kind_t::stem:
    return "stem:" + std::to_string( site.var ) + v;
  case fault_site::kind_t::branch:
    return "branch:" + std::to_string( site.gate ) + "," + std::to_string( site.var ) + v;
  case fault_site::kind_t::or_input:
    return "orin:" + std::to_string( site.gate ) + v;
  case fault_site::kind_t::or_output:
  default:
    return "orout" + v;
  }
}

/*! \brief Parses one fault line; inverse of format_fault. */
inline std::pair<fault_site, bool> parse_fault( const std::string& line )
{
  const auto fail = [&]() -> std::pair<fault_site, bool> {
    throw std::invalid_argument( "parse_fault: malformed fault '" + line + "'" );
  };

  const auto eq = line.rfind( '=' );
  if ( eq == std::string::npos || eq + 2u != line.size() ||
       ( line[eq + 1u] != '0' && line[eq + 1u] != '1' ) )
  {
    return fail();
  }
  const bool value = line[eq + 1u] == '1';
  const auto head = line.substr( 0u, eq );

  auto parse_num = [&]( const std::string& s ) -> uint32_t {
    if ( s.empty() )
    {
      fail();
    }
    size_t used = 0u;
    unsigned long parsed = 0u;
    try
    {
      parsed = std::stoul( s, &used );
    }
    catch ( const std::exception& )
    {
      fail();
    }
    if ( used != s.size() )
    {
      fail();
    }
    return static_cast<uint32_t>( parsed );
  };

  if ( head == "orout" )
  {
    return { { fault_site::kind_t::or_output, 0u, 0u }, value };
  }
  if ( head.rfind( "stem:", 0u ) == 0u )
  {
    return { { fault_site::kind_t::stem, 0u, parse_num( head.substr( 5u ) ) }, value };
  }
  if ( head.rfind( "orin:", 0u ) == 0u )
  {
    return { { fault_site::kind_t::or_input, parse_num( head.substr( 5u ) ), 0u }, value };
  }
  if ( head.rfind( "branch:", 0u ) == 0u )
  {
    const auto body = head.substr( 7u );
    const auto comma = body.find( ',' );
    if ( comma == std::string::npos )
    {
      fail();
    }
    return { { fault_site::kind_t::branch, parse_num( body.substr( 0u, comma ) ),
               parse_num( body.substr( comma + 1u ) ) },
             value };
  }
  return fail();
}

/*! \brief Parses fault lines; blank lines and `#` comments are skipped. */
inline fault_assignment parse_fault_lines( const std::string& text )
{
  fault_assignment faults;
  std::istringstream in( text );
  std::string line;
  while ( std::getline( in, line ) )
  {
    const auto hash = line.find( '#' );
    if ( hash != std::string::npos )
    {
      line = line.substr( 0u, hash );
    }
    line = detail::trim( line );
    if ( line.empty() )
    {
      continue;
    }
    const auto [site, value] = parse_fault( line );
    if ( !faults.emplace( site, value ).second )
    {
      throw std::invalid_argument( "parse_fault_lines: duplicate fault site in '" + line + "'" );
    }
  }
  return faults;
}

/*! \brief Renders a fault assignment, one line per fault, in site order. */
inline std::string format_fault_lines( const fault_assignment& faults )
{
  std::string out;
  for ( const auto& [site, value] : faults )
  {
    out += format_fault( site, value );
    out += '\n';
  }
  return out;
}

/*! \brief Parses a circuit file: one cube per line, `#` comments allowed. */
inline two_level_circuit parse_circuit( const std::string& text )
{
  std::vector<cube> gates;
  std::istringstream in( text );
  std::string line;
  uint32_t num_vars = 0u;
  while ( std::getline( in, line ) )
  {
    const auto hash = line.find( '#' );
    if ( hash != std::string::npos )
    {
      line = line.substr( 0u, hash );
    }
    line = detail::trim( line );
    if ( line.empty() )
    {
      continue;
    }
    auto c = parse_cube( line );
    if ( num_vars == 0u )
    {
      num_vars = c.num_vars;
    }
    else if ( c.num_vars != num_vars )
    {
      throw std::invalid_argument( "parse_circuit: cube '" + line + "' has inconsistent arity" );
    }
    gates.push_back( c );
  }
  if ( gates.empty() )
  {
    throw std::invalid_argument( "parse_circuit: no gates found" );
  }
  return two_level_circuit{ num_vars, gates };
}

/*! \brief Renders a circuit, one cube per line, in gate order. */
inline std::string format_circuit( const two_level_circuit& c )
{
  std::string out;
  for ( const auto& gate : c.gates )
  {
    out += to_string( gate );
    out += '\n';
  }
  return out;
}

} // namespace rootfn
