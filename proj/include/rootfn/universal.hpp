/*!
  \file universal.hpp
  \brief Root circuits as universal logic modules

  A faulted root circuit reaches many response functions, and NP transforms
  (free input inversions and permutations at the board level) multiply that
  reach.  These experiments quantify how close a handful of fixed root
  circuits come to realising *every* function of their arity:

  - at arity 3, the minimum-root circuit and the odd-parity circuit together
    cover all 256 functions up to NP equivalence;
  - at arity 4, the roots split into exactly three NP classes, and one
    circuit per class covers all 65536 functions.

  Closures are computed transform-major with precomputed per-byte lookup
  tables, which keeps the arity-4 walk (384 transforms over tens of
  thousands of responses) fast.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "construct.hpp"
#include "enumerate.hpp"
#include "faultsim.hpp"
#include "properties.hpp"
#include "sop.hpp"
#include "transform.hpp"
#include "truth_table.hpp"

namespace rootfn
{

namespace detail
{

/*! \brief Marks the NP closure of the given function masks in a bitmap over
    all 2^(2^n) functions.  Only sensible for n <= 4. */
inline std::vector<bool> np_closure_bitmap( uint32_t num_vars, const std::vector<uint32_t>& masks )
{
  const auto num_bits = uint32_t( 1 ) << num_vars;
  std::vector<bool> closure( uint64_t( 1 ) << num_bits, false );

  for_each_np_transform( num_vars, [&]( const np_transform& g ) {
    /* index map of the transform, then byte-level tables for mask mapping */
    uint32_t image[16];
    for ( uint32_t m = 0u; m < num_bits; ++m )
    {
      image[m] = static_cast<uint32_t>( g( m ) );
    }
    uint32_t lo[256], hi[256];
    const auto hi_bits = num_bits > 8u ? num_bits - 8u : 0u;
    for ( uint32_t b = 0u; b < 256u; ++b )
    {
      uint32_t mapped_lo = 0u, mapped_hi = 0u;
      for ( uint32_t i = 0u; i < 8u && i < num_bits; ++i )
      {
        if ( ( b >> i ) & 1u )
        {
          mapped_lo |= uint32_t( 1 ) << image[i];
        }
      }
      for ( uint32_t i = 0u; i < hi_bits; ++i )
      {
        if ( ( b >> i ) & 1u )
        {
          mapped_hi |= uint32_t( 1 ) << image[8u + i];
        }
      }
      lo[b] = mapped_lo;
      hi[b] = mapped_hi;
    }
    for ( const auto mask : masks )
    {
      closure[lo[mask & 0xffu] | hi[( mask >> 8u ) & 0xffu]] = true;
    }
  } );
  return closure;
}

inline std::vector<uint32_t> root_reachable_masks( const truth_table& root )
{
  return reachable_masks( build_circuit( root_cover( root ) ) );
}

} // namespace detail

/*! \brief Outcome of the two-module experiment at arity 3. */
struct universal_pair_report
{
  uint32_t num_vars;

  truth_table root_a; /*!< minimum root, two gates */
  truth_table root_b; /*!< odd parity, four gates */

  size_t reachable_a; /*!< distinct responses of the root_a circuit */
  size_t reachable_b;

  size_t covered_nonroots_a; /*!< non-root functions NP-equivalent to a response of a */
  size_t covered_nonroots_b;

  uint64_t covered_total; /*!< functions NP-equivalent to a response of either module */
  bool covers_all;        /*!< covered_total == 2^(2^n) */
};

/*! \brief Measures how much of the arity-3 function space two fixed root
    circuits reach under stuck-at faults and NP transforms. */
inline universal_pair_report universal_pair_experiment( uint32_t num_vars = 3u )
{
  if ( num_vars != 3u )
  {
    throw std::invalid_argument( "universal_pair_experiment: the two-module experiment is defined at arity 3" );
  }

  const auto root_a = catalog( num_vars ).front().function;
  const auto root_b = parity_function( num_vars, true );

  const auto masks_a = detail::root_reachable_masks( root_a );
  const auto masks_b = detail::root_reachable_masks( root_b );
  const auto closure_a = detail::np_closure_bitmap( num_vars, masks_a );
  const auto closure_b = detail::np_closure_bitmap( num_vars, masks_b );

  const auto space = uint64_t( 1 ) << ( uint64_t( 1 ) << num_vars );
  size_t nonroots_a = 0u, nonroots_b = 0u;
  uint64_t covered_total = 0u;
  for ( uint64_t m = 0u; m < space; ++m )
  {
    const auto root = is_root( truth_table::from_uint( num_vars, m ) );
    if ( closure_a[m] && !root )
    {
      ++nonroots_a;
    }
    if ( closure_b[m] && !root )
    {
      ++nonroots_b;
    }
    if ( closure_a[m] || closure_b[m] )
    {
      ++covered_total;
    }
  }
  return universal_pair_report{ num_vars,        root_a,     root_b,        masks_a.size(),
                                masks_b.size(),  nonroots_a, nonroots_b,    covered_total,
                                covered_total == space };
}

/*! \brief Outcome of the three-module search at arity 4. */
struct universal_triple_report
{
  uint32_t num_vars;

  size_t root_class_count;                        /*!< NP classes among all roots */
  std::vector<truth_table> class_representatives; /*!< canonical forms, ascending */
  std::vector<size_t> class_sizes;                /*!< roots per class */
  std::vector<size_t> closure_sizes;              /*!< NP-closed response sets per class */

  uint64_t covered_total; /*!< functions NP-equivalent to a response of some class */
  bool covers_all;
};

/*! \brief Groups the arity-4 roots into NP classes and measures the joint
    coverage of one module circuit per class. */
inline universal_triple_report universal_triple_search( uint32_t num_vars = 4u )
{
  if ( num_vars != 4u )
  {
    throw std::invalid_argument( "universal_triple_search: the three-module search is defined at arity 4" );
  }

  universal_triple_report report{ num_vars, 0u, {}, {}, {}, 0u, false };

  std::map<truth_table, size_t> classes; /* canonical form -> root count */
  enumerate_roots( num_vars, [&]( const truth_table& r ) { ++classes[np_canonical( r )]; } );

  report.root_class_count = classes.size();
  const auto space = uint64_t( 1 ) << ( uint64_t( 1 ) << num_vars );
  std::vector<bool> covered( space, false );
  for ( const auto& [rep, count] : classes )
  {
    report.class_representatives.push_back( rep );
    report.class_sizes.push_back( count );
    const auto closure = detail::np_closure_bitmap( num_vars, detail::root_reachable_masks( rep ) );
    size_t size = 0u;
    for ( uint64_t m = 0u; m < space; ++m )
    {
      if ( closure[m] )
      {
        ++size;
        covered[m] = true;
      }
    }
    report.closure_sizes.push_back( size );
  }

  report.covered_total = 0u;
  for ( uint64_t m = 0u; m < space; ++m )
  {
    if ( covered[m] )
    {
      ++report.covered_total;
    }
  }
  report.covers_all = report.covered_total == space;
  return report;
}

} // namespace rootfn
