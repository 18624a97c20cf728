/*!
  \file transform.hpp
  \brief NP transforms: input negation followed by input permutation

  An NP transform g acts on minterms as g(m) = P(m XOR N), where N selects
  the variables to complement and P permutes variable positions.  Acting on
  functions by relabelling inputs, the transforms form a group of order
  n! * 2^n whose orbits are the NP equivalence classes.  Root functions are
  closed under this action: complementing inputs and renaming inputs are
  both hypercube automorphisms, so independence and domination of the true
  minterm set are preserved.

  The orbit walks (`all_np_transforms`, `np_canonical`, `np_orbit`) are
  guarded to arity 8; the group grows too fast beyond desk scale.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "truth_table.hpp"

namespace rootfn
{

/*! \brief One NP transform: complement the variables in neg_mask, then permute. */
struct np_transform
{
  /*! \param perm 1-based images: variable x_(j+1) moves to position perm[j]
      \param neg_mask bit j set complements variable x_(j+1) before permuting */
  np_transform( std::vector<uint32_t> perm, uint64_t neg_mask )
      : perm( std::move( perm ) ), neg_mask( neg_mask )
  {
    const auto n = static_cast<uint32_t>( this->perm.size() );
    if ( n == 0u || n > max_arity )
    {
      throw std::invalid_argument( "np_transform: arity out of range" );
    }
    uint64_t seen = 0u;
    for ( auto p : this->perm )
    {
      if ( p == 0u || p > n || ( ( seen >> ( p - 1u ) ) & 1u ) != 0u )
      {
        throw std::invalid_argument( "np_transform: perm is not a permutation of 1..n" );
      }
      seen |= uint64_t( 1 ) << ( p - 1u );
    }
    if ( n < 64u && this->neg_mask >> n )
    {
      throw std::invalid_argument( "np_transform: neg_mask is not a subset of the variables" );
    }
  }

  static np_transform identity( uint32_t num_vars )
  {
    std::vector<uint32_t> perm( num_vars );
    std::iota( perm.begin(), perm.end(), 1u );
    return np_transform( std::move( perm ), 0u );
  }

  uint32_t arity() const { return static_cast<uint32_t>( perm.size() ); }

  /*! \brief Image of a minterm index. */
  uint64_t operator()( uint64_t m ) const
  {
    const auto x = m ^ neg_mask;
    uint64_t image = 0u;
    for ( uint32_t j = 0u; j < perm.size(); ++j )
    {
      if ( ( x >> j ) & 1u )
      {
        image |= uint64_t( 1 ) << ( perm[j] - 1u );
      }
    }
    return image;
  }

  bool operator==( const np_transform& other ) const = default;

  std::vector<uint32_t> perm;
  uint64_t neg_mask;
};

/*! \brief Composition: (compose(h, g))(m) = h(g(m)); g acts first. */
inline np_transform compose( const np_transform& h, const np_transform& g )
{
  if ( h.arity() != g.arity() )
  {
    throw std::invalid_argument( "compose: arity mismatch" );
  }
  const auto n = g.arity();
  std::vector<uint32_t> perm( n );
  uint64_t neg = g.neg_mask;
  for ( uint32_t j = 0u; j < n; ++j )
  {
    perm[j] = h.perm[g.perm[j] - 1u];
    /* pull h's negation of position g.perm[j] back onto source variable j */
    if ( ( h.neg_mask >> ( g.perm[j] - 1u ) ) & 1u )
    {
      neg ^= uint64_t( 1 ) << j;
    }
  }
  return np_transform( std::move( perm ), neg );
}

/*! \brief The transform mapping g(m) back to m. */
inline np_transform inverse( const np_transform& g )
{
  const auto n = g.arity();
  std::vector<uint32_t> perm( n );
  uint64_t neg = 0u;
  for ( uint32_t j = 0u; j < n; ++j )
  {
    perm[g.perm[j] - 1u] = j + 1u;
    if ( ( g.neg_mask >> j ) & 1u )
    {
      neg |= uint64_t( 1 ) << ( g.perm[j] - 1u );
    }
  }
  return np_transform( std::move( perm ), neg );
}

/*! \brief Relabels the inputs of f by g: the result is true on g(m) iff f is true on m. */
inline truth_table apply_transform( const truth_table& f, const np_transform& g )
{
  if ( g.arity() != f.num_vars() )
  {
    throw std::invalid_argument( "apply_transform: arity mismatch" );
  }
  truth_table r( f.num_vars() );
  f.for_each_one( [&]( uint64_t m ) { r.set_bit( g( m ) ); } );
  return r;
}

namespace detail
{

inline void check_orbit_arity( uint32_t num_vars, const char* what )
{
  if ( num_vars > 8u )
  {
    throw resource_error( std::string( what ) + ": the NP group is only walked up to arity 8" );
  }
}

/*! \brief Calls fn(g) for every NP transform, perm-major in lexicographic
    order, negation masks ascending within each permutation. */
template<typename Fn>
void for_each_np_transform( uint32_t num_vars, Fn&& fn )
{
  std::vector<uint32_t> perm( num_vars );
  std::iota( perm.begin(), perm.end(), 1u );
  const auto neg_end = uint64_t( 1 ) << num_vars;
  do
  {
    for ( uint64_t neg = 0u; neg < neg_end; ++neg )
    {
      fn( np_transform( perm, neg ) );
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
}

} // namespace detail

/*! \brief All n! * 2^n NP transforms in a fixed deterministic order. */
inline std::vector<np_transform> all_np_transforms( uint32_t num_vars )
{
  if ( num_vars == 0u )
  {
    throw std::invalid_argument( "all_np_transforms: arity must be at least 1" );
  }
  detail::check_orbit_arity( num_vars, "all_np_transforms" );
  std::vector<np_transform> result;
  detail::for_each_np_transform( num_vars, [&]( np_transform g ) { result.push_back( std::move( g ) ); } );
  return result;
}

/*! \brief Least table in f's NP orbit; equal canonical forms mean NP-equivalent functions. */
inline truth_table np_canonical( const truth_table& f )
{
  detail::check_orbit_arity( f.num_vars(), "np_canonical" );
  truth_table best = f;
  detail::for_each_np_transform( f.num_vars(), [&]( const np_transform& g ) {
    auto candidate = apply_transform( f, g );
    if ( candidate < best )
    {
      best = std::move( candidate );
    }
  } );
  return best;
}

/*! \brief The full NP orbit of f, in ascending table order. */
inline std::set<truth_table> np_orbit( const truth_table& f )
{
  detail::check_orbit_arity( f.num_vars(), "np_orbit" );
  std::set<truth_table> orbit;
  detail::for_each_np_transform( f.num_vars(), [&]( const np_transform& g ) {
    orbit.insert( apply_transform( f, g ) );
  } );
  return orbit;
}

} // namespace rootfn
