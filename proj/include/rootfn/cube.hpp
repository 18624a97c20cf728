/*!
  \file cube.hpp
  \brief Product terms over n variables

  A cube is a conjunction of literals.  It is stored as two bit masks: `care`
  marks the variables that appear, and `bits` gives their polarity (a subset
  of `care`).  The text form writes one character per variable, x_n first,
  x_1 last: '1' for a positive literal, '0' for a negative literal, '-' for
  an absent variable.  So "1-0" over three variables is x_3 * x_1'.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "truth_table.hpp"

namespace rootfn
{

/*! \brief One product term with explicit arity. */
struct cube
{
  cube( uint32_t num_vars, uint64_t care, uint64_t bits )
      : num_vars( num_vars ), care( care ), bits( bits )
  {
    if ( num_vars == 0u || num_vars > max_arity )
    {
      throw std::invalid_argument( "cube: arity out of range" );
    }
    const auto all = ( uint64_t( 1 ) << num_vars ) - 1u;
    if ( ( care & ~all ) != 0u || ( bits & ~care ) != 0u )
    {
      throw std::invalid_argument( "cube: polarity bits must be a subset of care bits within the arity" );
    }
  }

  /*! \brief The full cube of a single minterm. */
  static cube minterm_cube( uint32_t num_vars, uint64_t index )
  {
    const auto all = ( uint64_t( 1 ) << num_vars ) - 1u;
    if ( index > all )
    {
      throw std::invalid_argument( "cube: minterm index out of range" );
    }
    return cube( num_vars, all, index );
  }

  uint32_t num_literals() const { return static_cast<uint32_t>( __builtin_popcountll( care ) ); }

  /*! \brief Number of minterms the cube covers: 2^(n - literals). */
  uint64_t covered_count() const { return uint64_t( 1 ) << ( num_vars - num_literals() ); }

  bool contains( uint64_t minterm_index ) const
  {
    return ( minterm_index & care ) == bits;
  }

  bool operator==( const cube& other ) const = default;

  /*! \brief Lexicographic order of the text form ('-' < '0' < '1'). */
  bool operator<( const cube& other ) const
  {
    if ( num_vars != other.num_vars )
    {
      return num_vars < other.num_vars;
    }
    for ( uint32_t i = num_vars; i-- > 0u; )
    {
      const auto a = literal_rank( i );
      const auto b = other.literal_rank( i );
      if ( a != b )
      {
        return a < b;
      }
    }
    return false;
  }

  uint32_t num_vars;
  uint64_t care;
  uint64_t bits;

private:
  uint32_t literal_rank( uint32_t pos ) const
  {
    if ( !( ( care >> pos ) & 1u ) )
    {
      return 0u; /* '-' */
    }
    return ( ( bits >> pos ) & 1u ) ? 2u : 1u;
  }
};

/*! \brief Text form x_n .. x_1 over {'0', '1', '-'}. */
inline std::string to_string( const cube& c )
{
  std::string s( c.num_vars, '-' );
  for ( uint32_t i = 0u; i < c.num_vars; ++i )
  {
    if ( ( c.care >> i ) & 1u )
    {
      s[c.num_vars - 1u - i] = ( ( c.bits >> i ) & 1u ) ? '1' : '0';
    }
  }
  return s;
}

/*! \brief Parses the text form; the string length fixes the arity. */
inline cube parse_cube( const std::string& text )
{
  if ( text.empty() || text.size() > max_arity )
  {
    throw std::invalid_argument( "parse_cube: cube length must be between 1 and " + std::to_string( max_arity ) );
  }
  const auto num_vars = static_cast<uint32_t>( text.size() );
  uint64_t care = 0u, bits = 0u;
  for ( uint32_t i = 0u; i < num_vars; ++i )
  {
    const auto c = text[num_vars - 1u - i];
    if ( c == '1' )
    {
      care |= uint64_t( 1 ) << i;
      bits |= uint64_t( 1 ) << i;
    }
    else if ( c == '0' )
    {
      care |= uint64_t( 1 ) << i;
    }
    else if ( c != '-' )
    {
      throw std::invalid_argument( "parse_cube: invalid character '" + std::string( 1u, c ) + "'" );
    }
  }
  return cube( num_vars, care, bits );
}

/*! \brief True when every minterm of b is covered by a. */
inline bool subsumes( const cube& a, const cube& b )
{
  if ( a.num_vars != b.num_vars )
  {
    throw std::invalid_argument( "subsumes: arity mismatch" );
  }
  return ( a.care & ~b.care ) == 0u && ( b.bits & a.care ) == a.bits;
}

/*! \brief Calls fn(index) for every covered minterm, in ascending order. */
template<typename Fn>
void for_each_cube_minterm( const cube& c, Fn&& fn )
{
  const auto all = ( uint64_t( 1 ) << c.num_vars ) - 1u;
  const auto absent = all & ~c.care;
  uint64_t s = 0u;
  while ( true )
  {
    fn( c.bits | s );
    if ( s == absent )
    {
      break;
    }
    s = ( s - absent ) & absent;
  }
}

/*! \brief The characteristic function of the cube. */
inline truth_table cube_function( const cube& c )
{
  truth_table f( c.num_vars );
  for_each_cube_minterm( c, [&]( uint64_t m ) { f.set_bit( m ); } );
  return f;
}

/*! \brief All cubes obtained by dropping literal subsets, the cube itself first.

  Order is deterministic: drop masks enumerate ascending as integers.
*/
inline std::vector<cube> supercubes( const cube& c )
{
  std::vector<cube> result;
  uint64_t drop = 0u;
  while ( true )
  {
    result.emplace_back( c.num_vars, c.care & ~drop, c.bits & ~drop );
    if ( drop == c.care )
    {
      break;
    }
    drop = ( drop - c.care ) & c.care;
  }
  return result;
}

} // namespace rootfn
