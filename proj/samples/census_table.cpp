/*!
  \file census_table.cpp
  \brief Counts all root functions of arities 2 to 5, split by cardinality

  A root function is non-vacuous, has no two adjacent true minterms, and
  dominates every false minterm; its true minterms form a maximal
  independent set of the hypercube.  This sample enumerates them
  exhaustively and prints one census row per cardinality, together with the
  theoretical bounds and the cardinalities inside the bounds that no root
  attains.
*/

#include <cstdio>

#include <rootfn/rootfn.hpp>

int main()
{
  for ( uint32_t n = 2u; n <= 5u; ++n )
  {
    const auto c = rootfn::census( n );
    const auto bounds = rootfn::root_size_bounds( n );
    std::printf( "n = %u: %llu roots, cardinality bounds [%llu, %llu]\n", n,
                 static_cast<unsigned long long>( c.total ),
                 static_cast<unsigned long long>( bounds.lower ),
                 static_cast<unsigned long long>( bounds.upper ) );
    for ( const auto& [cardinality, count] : c.by_cardinality )
    {
      std::printf( "  %2llu true minterms: %llu\n",
                   static_cast<unsigned long long>( cardinality ),
                   static_cast<unsigned long long>( count ) );
    }
    const auto missing = rootfn::missing_cardinalities( c );
    if ( !missing.empty() )
    {
      std::printf( "  unattained:" );
      for ( const auto k : missing )
      {
        std::printf( " %llu", static_cast<unsigned long long>( k ) );
      }
      std::printf( "\n" );
    }
  }
  return 0;
}
