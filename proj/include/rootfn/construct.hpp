/*!
  \file construct.hpp
  \brief Constructive generators for root functions

  Three ways to obtain root functions without search:

  - the two parity functions, the unique roots of maximum cardinality 2^(n-1);
  - `lift`, which extends an arity-n root to arity n+1 by pairing it with a
    single-variable-complemented copy of itself, doubling the cardinality;
  - a small catalog of named fixture roots for arities 2 through 7.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "properties.hpp"
#include "truth_table.hpp"

namespace rootfn
{

/*! \brief Indicator of even or odd variable weight. */
inline truth_table parity_function( uint32_t num_vars, bool odd )
{
  truth_table f( num_vars );
  for ( uint64_t m = 0u; m < f.num_bits(); ++m )
  {
    if ( ( __builtin_popcountll( m ) & 1 ) == ( odd ? 1 : 0 ) )
    {
      f.set_bit( m );
    }
  }
  return f;
}

/*! \brief The two roots of maximum cardinality 2^(n-1), in ascending table order.

  These are the even-parity and odd-parity indicators; they are complements
  of one another, and no other root of the same arity reaches the bound.
*/
inline std::pair<truth_table, truth_table> parity_max_roots( uint32_t num_vars )
{
  if ( num_vars < 2u )
  {
    throw std::invalid_argument( "parity_max_roots: arity must be at least 2" );
  }
  auto even = parity_function( num_vars, false );
  auto odd = parity_function( num_vars, true );
  if ( odd < even )
  {
    std::swap( even, odd );
  }
  return { std::move( even ), std::move( odd ) };
}

/*! \brief Extends a root to arity n+1.

  The lower half (x_(n+1) = 0) is the input root; the upper half is the same
  root with variable x_var complemented.  Complementing one variable keeps a
  root a root, and stacking a root against a shifted copy of itself keeps
  true minterms isolated across halves while dominating both halves, so the
  result is again a root, with exactly twice as many true minterms.

  \param var variable of the input root to complement in the upper half, 1-based
*/
inline truth_table lift( const truth_table& root, uint32_t var )
{
  if ( var == 0u || var > root.num_vars() )
  {
    throw std::invalid_argument( "lift: variable index out of range" );
  }
  if ( !is_root( root ) )
  {
    throw std::invalid_argument( "lift: input is not a root function" );
  }
  const auto shifted = flip_variable( root, var );
  truth_table r( root.num_vars() + 1u );
  root.for_each_one( [&]( uint64_t m ) { r.set_bit( m ); } );
  shifted.for_each_one( [&]( uint64_t m ) { r.set_bit( m | root.num_bits() ); } );
  return r;
}

/*! \brief A named root function fixture. */
struct catalog_entry
{
  std::string label;
  truth_table function;
};

namespace detail
{

inline truth_table fixture( uint32_t num_vars, std::vector<uint64_t> minterms )
{
  return truth_table::from_minterms( num_vars, minterms );
}

} // namespace detail

/*! \brief Named fixture roots for arities 2 through 7.

  Every arity carries a `min-root` entry of minimum cardinality and the two
  parity entries `parity-even` and `parity-odd`.  Arity 4 adds the
  five-minterm root used by the fault-scenario walkthroughs, and arity 6 adds
  a sixteen-minterm root that is a lift of an arity-5 minimum root.  For
  arity 2 the minimum root coincides with even parity; it is listed under
  both labels.  Entry order is fixed: min-root, parity-even, parity-odd,
  then extras.
*/
inline std::vector<catalog_entry> catalog( uint32_t num_vars )
{
  if ( num_vars < 2u || num_vars > 7u )
  {
    throw std::invalid_argument( "catalog: fixtures cover arities 2 through 7" );
  }

  std::vector<catalog_entry> entries;
  switch ( num_vars )
  {
  case 2u:
    entries.push_back( { "min-root", detail::fixture( 2u, { 0b00, 0b11 } ) } );
    break;
  case 3u:
    entries.push_back( { "min-root", detail::fixture( 3u, { 0b000, 0b111 } ) } );
    break;
  case 4u:
    entries.push_back( { "min-root", detail::fixture( 4u, { 0b0100, 0b0111, 0b1001, 0b1010 } ) } );
    break;
  case 5u:
    entries.push_back( { "min-root", detail::fixture( 5u, { 0b00000, 0b00111, 0b01101, 0b01010,
                                                            0b10001, 0b10110, 0b11100, 0b11011 } ) } );
    break;
  case 6u:
    entries.push_back( { "min-root", detail::fixture( 6u, { 0b000000, 0b000111, 0b001100, 0b011010,
                                                            0b011001, 0b010100, 0b101011, 0b100110,
                                                            0b100101, 0b110011, 0b111000, 0b111111 } ) } );
    break;
  case 7u:
  default:
    entries.push_back( { "min-root", detail::fixture( 7u, { 0b0001011, 0b0001100, 0b0010010, 0b0010101,
                                                            0b0111000, 0b0111111, 0b0100001, 0b0100110,
                                                            0b1000000, 0b1000111, 0b1011001, 0b1011110,
                                                            0b1110011, 0b1110100, 0b1101010, 0b1101101 } ) } );
    break;
  }

  entries.push_back( { "parity-even", parity_function( num_vars, false ) } );
  entries.push_back( { "parity-odd", parity_function( num_vars, true ) } );

  if ( num_vars == 4u )
  {
    entries.push_back( { "five-minterm", detail::fixture( 4u, { 0b0000, 0b0111, 0b1011, 0b1101, 0b1110 } ) } );
  }
  if ( num_vars == 6u )
  {
    entries.push_back( { "sixteen-minterm", detail::fixture( 6u, { 0b000000, 0b000111, 0b001010, 0b001101,
                                                                   0b010001, 0b010110, 0b011011, 0b011100,
                                                                   0b100001, 0b100110, 0b101011, 0b101100,
                                                                   0b110000, 0b110111, 0b111010, 0b111101 } ) } );
  }
  return entries;
}

} // namespace rootfn
