/*!
  \file minterm.hpp
  \brief Minterms as vertices of the Boolean hypercube

  A minterm of arity n is an assignment to x_1 .. x_n, identified with the
  index whose bit 2^(i-1) is the value of x_i.  Two minterms are adjacent
  when their indices differ in exactly one bit, so the 2^n minterms of arity
  n form the hypercube graph Q_n.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "truth_table.hpp"

namespace rootfn
{

/*! \brief A single minterm (hypercube vertex) with explicit arity. */
struct minterm
{
  uint32_t num_vars;
  uint64_t index;

  minterm( uint32_t num_vars, uint64_t index )
      : num_vars( num_vars ), index( index )
  {
    if ( num_vars == 0u || num_vars > max_arity )
    {
      throw std::invalid_argument( "minterm: arity out of range" );
    }
    if ( index >= ( uint64_t( 1 ) << num_vars ) )
    {
      throw std::invalid_argument( "minterm: index out of range for arity " + std::to_string( num_vars ) );
    }
  }

  bool operator==( const minterm& other ) const = default;

  /*! \brief Value of variable x_var (1-based). */
  bool value_of( uint32_t var ) const { return ( index >> ( var - 1u ) ) & 1u; }
};

/*! \brief Number of variable positions in which a and b differ. */
inline uint32_t hamming_distance( const minterm& a, const minterm& b )
{
  if ( a.num_vars != b.num_vars )
  {
    throw std::invalid_argument( "hamming_distance: arity mismatch" );
  }
  return static_cast<uint32_t>( __builtin_popcountll( a.index ^ b.index ) );
}

/*! \brief True when a and b are adjacent in the hypercube. */
inline bool adjacent( const minterm& a, const minterm& b )
{
  return hamming_distance( a, b ) == 1u;
}

/*! \brief The n neighbours of m, ordered by the flipped variable x_1 .. x_n. */
inline std::vector<minterm> neighbors( const minterm& m )
{
  std::vector<minterm> result;
  result.reserve( m.num_vars );
  for ( uint32_t i = 1u; i <= m.num_vars; ++i )
  {
    result.emplace_back( m.num_vars, m.index ^ ( uint64_t( 1 ) << ( i - 1u ) ) );
  }
  return result;
}

/*! \brief Number of variables set to 1. */
inline uint32_t weight( const minterm& m )
{
  return static_cast<uint32_t>( __builtin_popcountll( m.index ) );
}

/*! \brief Renders m as the bit string x_n .. x_1, e.g. index 6 of arity 3 as "110". */
inline std::string to_string( const minterm& m )
{
  std::string s( m.num_vars, '0' );
  for ( uint32_t i = 0u; i < m.num_vars; ++i )
  {
    if ( ( m.index >> i ) & 1u )
    {
      s[m.num_vars - 1u - i] = '1';
    }
  }
  return s;
}

/*! \brief Adjacency view of the hypercube Q_n; vertices are minterm indices. */
struct hypercube_graph
{
  explicit hypercube_graph( uint32_t num_vars )
      : num_vars( num_vars )
  {
    if ( num_vars == 0u || num_vars > max_arity )
    {
      throw std::invalid_argument( "hypercube_graph: arity out of range" );
    }
  }

  uint64_t num_vertices() const { return uint64_t( 1 ) << num_vars; }
  uint64_t num_edges() const { return num_vars * ( num_vertices() >> 1u ); }

  bool adjacent( uint64_t u, uint64_t v ) const
  {
    return __builtin_popcountll( u ^ v ) == 1;
  }

  /*! \brief Neighbours of v, ordered by the flipped variable x_1 .. x_n. */
  std::vector<uint64_t> neighbors( uint64_t v ) const
  {
    std::vector<uint64_t> result;
    result.reserve( num_vars );
    for ( uint32_t i = 0u; i < num_vars; ++i )
    {
      result.push_back( v ^ ( uint64_t( 1 ) << i ) );
    }
    return result;
  }

  uint32_t num_vars;
};

} // namespace rootfn
