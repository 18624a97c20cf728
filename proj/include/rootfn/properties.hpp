/*!
  \file properties.hpp
  \brief Structural predicates for root functions

  A Boolean function is a *root function* when it satisfies all three of

  - non-vacuous: every variable x_i influences the output;
  - isolated: no two true minterms are adjacent in the hypercube;
  - maximal: every false minterm is adjacent to some true minterm.

  Read as a vertex set of the hypercube Q_n, the true minterms of a root
  function form an independent dominating set, i.e. a maximal independent
  set.  Isolation plus maximality already forces every variable into the
  support, so `is_root` holds exactly when the other two predicates hold;
  the non-vacuity check is kept explicit anyway so that each predicate can
  be queried and reported on its own.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "minterm.hpp"
#include "truth_table.hpp"

namespace rootfn
{

/*! \brief Restricts f by fixing x_var to the given value.

  The result has arity n-1; variables above x_var shift down by one.

  \param var variable index, 1-based
*/
inline truth_table cofactor( const truth_table& f, uint32_t var, bool value )
{
  if ( var == 0u || var > f.num_vars() )
  {
    throw std::invalid_argument( "cofactor: variable index out of range" );
  }
  if ( f.num_vars() == 1u )
  {
    throw std::invalid_argument( "cofactor: cannot restrict an arity-1 function" );
  }
  truth_table r( f.num_vars() - 1u );
  const auto low_mask = ( uint64_t( 1 ) << ( var - 1u ) ) - 1u;
  for ( uint64_t m = 0u; m < r.num_bits(); ++m )
  {
    const auto lifted = ( m & low_mask ) |
                        ( value ? ( uint64_t( 1 ) << ( var - 1u ) ) : 0u ) |
                        ( ( m & ~low_mask ) << 1u );
    if ( f.get_bit( lifted ) )
    {
      r.set_bit( m );
    }
  }
  return r;
}

/*! \brief Variables that influence f, as ascending 1-based indices. */
inline std::vector<uint32_t> support( const truth_table& f )
{
  std::vector<uint32_t> vars;
  for ( uint32_t i = 1u; i <= f.num_vars(); ++i )
  {
    if ( flip_variable( f, i ) != f )
    {
      vars.push_back( i );
    }
  }
  return vars;
}

/*! \brief True when every declared variable influences f. */
inline bool is_non_vacuous( const truth_table& f )
{
  for ( uint32_t i = 1u; i <= f.num_vars(); ++i )
  {
    if ( flip_variable( f, i ) == f )
    {
      return false;
    }
  }
  return true;
}

/*! \brief True when no two true minterms of f are adjacent. */
inline bool is_isolated( const truth_table& f )
{
  for ( uint32_t i = 1u; i <= f.num_vars(); ++i )
  {
    if ( !( f & flip_variable( f, i ) ).is_const0() )
    {
      return false;
    }
  }
  return true;
}

/*! \brief Union of f's neighbourhoods: true on m iff some neighbour of m is true in f. */
inline truth_table neighborhood( const truth_table& f )
{
  truth_table nb( f.num_vars() );
  for ( uint32_t i = 1u; i <= f.num_vars(); ++i )
  {
    nb |= flip_variable( f, i );
  }
  return nb;
}

/*! \brief True when every false minterm of f is adjacent to a true one. */
inline bool is_maximal( const truth_table& f )
{
  return ( ~f & ~neighborhood( f ) ).is_const0();
}

/*! \brief True when f is a root function. */
inline bool is_root( const truth_table& f )
{
  truth_table nb( f.num_vars() );
  for ( uint32_t i = 1u; i <= f.num_vars(); ++i )
  {
    const auto flipped = flip_variable( f, i );
    if ( flipped == f || !( f & flipped ).is_const0() )
    {
      return false;
    }
    nb |= flipped;
  }
  return ( ~f & ~nb ).is_const0();
}

/*! \brief True minterms of f adjacent to the false minterm m. */
inline std::vector<minterm> dominators_of( const truth_table& f, const minterm& m )
{
  if ( m.num_vars != f.num_vars() )
  {
    throw std::invalid_argument( "dominators_of: arity mismatch" );
  }
  if ( f.get_bit( m.index ) )
  {
    throw std::invalid_argument( "dominators_of: minterm is true in f" );
  }
  std::vector<minterm> result;
  for ( const auto& nb : neighbors( m ) )
  {
    if ( f.get_bit( nb.index ) )
    {
      result.push_back( nb );
    }
  }
  return result;
}

/*! \brief Inclusive bounds on the number of true minterms of any arity-n root function. */
struct size_bounds
{
  uint64_t lower;
  uint64_t upper;
};

/*! \brief Cardinality bounds ceil(2^n / (n+1)) and 2^(n-1).

  The lower bound is the domination number of Q_n relaxed to a sphere-packing
  argument: each true minterm covers itself and its n neighbours.  The upper
  bound is attained exactly by the two parity functions.
*/
inline size_bounds root_size_bounds( uint32_t num_vars )
{
  if ( num_vars == 0u || num_vars > 62u )
  {
    throw std::invalid_argument( "root_size_bounds: arity out of range" );
  }
  const auto points = uint64_t( 1 ) << num_vars;
  return { ( points + num_vars ) / ( num_vars + 1u ), uint64_t( 1 ) << ( num_vars - 1u ) };
}

} // namespace rootfn
