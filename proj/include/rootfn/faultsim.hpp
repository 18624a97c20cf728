/*!
  \file faultsim.hpp
  \brief Reachable faulty responses and the root fault-immunity audit

  `reachable_responses` computes every function a two-level circuit can
  realise under any set of simultaneous stuck-at faults, including the empty
  set.  It works gate by gate: a faulted AND gate realises either constant 0
  (some literal stuck the wrong way, or its OR input stuck at 0) or a
  supercube of its cube (some literals dropped); the circuit response is an
  OR of one choice per gate, plus the two constants from output-side faults.
  Stem faults only produce coordinated choices of the same branch picks, so
  they add nothing to the set; the test suite cross-checks that against a
  literal enumeration of all per-branch fault combinations.

  The audit enumerates all roots of one arity and verifies that no circuit
  of a root can be faulted into a different root: every reachable response
  other than the fault-free one fails to be a root function.
*/

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "circuit.hpp"
#include "enumerate.hpp"
#include "properties.hpp"
#include "sop.hpp"
#include "truth_table.hpp"

namespace rootfn
{

namespace detail
{

inline void check_reach_scale( const two_level_circuit& c, const char* what )
{
  if ( c.num_vars > 4u )
  {
    throw resource_error( std::string( what ) + ": response sets are only walked up to arity 4" );
  }
  if ( c.gates.size() > 16u )
  {
    throw resource_error( std::string( what ) + ": response sets are only walked up to 16 gates" );
  }
}

/*! \brief All reachable response functions as packed bit masks, ascending. */
inline std::vector<uint32_t> reachable_masks( const two_level_circuit& c )
{
  check_reach_scale( c, "reachable_responses" );
  const auto num_bits = uint32_t( 1 ) << c.num_vars;
  const auto full = num_bits == 32u ? ~uint32_t( 0 ) : ( ( uint32_t( 1 ) << num_bits ) - 1u );
  const auto space = uint64_t( 1 ) << num_bits;

  /* per-gate options: constant 0 or any supercube of the gate's cube */
  std::vector<std::vector<uint32_t>> options( c.gates.size() );
  for ( size_t g = 0u; g < c.gates.size(); ++g )
  {
    options[g].push_back( 0u );
    for ( const auto& sc : supercubes( c.gates[g] ) )
    {
      uint32_t mask = 0u;
      for_each_cube_minterm( sc, [&]( uint64_t m ) { mask |= uint32_t( 1 ) << m; } );
      options[g].push_back( mask );
    }
  }

  std::vector<uint32_t> current{ 0u };
  for ( const auto& gate_options : options )
  {
    std::vector<bool> seen( space, false );
    std::vector<uint32_t> next;
    for ( const auto s : current )
    {
      for ( const auto o : gate_options )
      {
        const auto candidate = s | o;
        if ( !seen[candidate] )
        {
          seen[candidate] = true;
          next.push_back( candidate );
        }
      }
    }
    current = std::move( next );
  }

  /* output-side faults reach both constants */
  std::vector<bool> seen( space, false );
  for ( const auto s : current )
  {
    seen[s] = true;
  }
  seen[0u] = true;
  seen[full] = true;

  std::vector<uint32_t> result;
  for ( uint64_t m = 0u; m < space; ++m )
  {
    if ( seen[m] )
    {
      result.push_back( static_cast<uint32_t>( m ) );
    }
  }
  return result;
}

} // namespace detail

/*! \brief Every function the circuit can produce under stuck-at faults.

  Includes the fault-free function.  Guarded to arity 4 and 16 gates.
*/
inline std::set<truth_table> reachable_responses( const two_level_circuit& c )
{
  std::set<truth_table> result;
  for ( const auto mask : detail::reachable_masks( c ) )
  {
    result.insert( truth_table::from_uint( c.num_vars, mask ) );
  }
  return result;
}

/*! \brief Audit result: no root circuit may be faulted into another root. */
struct immunity_report
{
  uint32_t num_vars;
  uint64_t roots_checked;
  uint64_t responses_checked; /*!< total reachable responses across all roots */

  /*! \brief Offending (root, reachable different root) pairs; empty on pass. */
  std::vector<std::pair<truth_table, truth_table>> violations;

  bool pass;
};

/*! \brief Checks every arity-n root: faulty responses never land on a different root.

  Each root is realised as its canonical minterm-cube circuit.  Responses
  equal to the fault-free function are fine (undetectable fault sets); any
  other reachable response must fail the root predicates.
*/
inline immunity_report fault_immunity_audit( uint32_t num_vars, const enumerate_options& opts = {} )
{
  if ( num_vars == 0u )
  {
    throw std::invalid_argument( "fault_immunity_audit: arity must be at least 1" );
  }
  if ( num_vars > 4u )
  {
    throw resource_error( "fault_immunity_audit: audits are only run up to arity 4" );
  }

  const auto num_bits = uint32_t( 1 ) << num_vars;
  std::vector<bool> is_root_mask( uint64_t( 1 ) << num_bits, false );
  std::vector<uint32_t> roots;
  enumerate_roots( num_vars, [&]( const truth_table& r ) {
    const auto mask = static_cast<uint32_t>( r.to_uint() );
    is_root_mask[mask] = true;
    roots.push_back( mask );
  }, opts );

  immunity_report report{ num_vars, roots.size(), 0u, {}, true };
  for ( const auto root_mask : roots )
  {
    const auto root = truth_table::from_uint( num_vars, root_mask );
    const auto circuit = build_circuit( root_cover( root ) );
    for ( const auto response : detail::reachable_masks( circuit ) )
    {
      ++report.responses_checked;
      if ( response != root_mask && is_root_mask[response] )
      {
        report.violations.emplace_back( root, truth_table::from_uint( num_vars, response ) );
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

} // namespace rootfn
