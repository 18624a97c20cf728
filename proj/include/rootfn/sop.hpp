/*!
  \file sop.hpp
  \brief Prime implicants and irredundant sum-of-products covers

  Primes are computed with the classic merging procedure: start from the
  true minterms as full cubes and repeatedly join pairs that differ in one
  polarity, retiring cubes that never merged.  An irredundant cover is then
  assembled from the primes (essential primes first, greedy by coverage
  after), followed by one front-to-back pruning sweep that removes terms
  whose minterms are covered by the rest.

  For root functions the picture degenerates on purpose: isolated true
  minterms can never merge, so every minterm is itself a prime, and the only
  irredundant cover is the list of all minterm cubes.
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "cube.hpp"
#include "truth_table.hpp"

namespace rootfn
{

/*! \brief A disjunction of cubes with explicit arity. */
struct sop_cover
{
  uint32_t num_vars;
  std::vector<cube> terms;
};

/*! \brief The function realised by the cover. */
inline truth_table cover_function( const sop_cover& cover )
{
  truth_table f( cover.num_vars );
  for ( const auto& term : cover.terms )
  {
    if ( term.num_vars != cover.num_vars )
    {
      throw std::invalid_argument( "cover_function: term arity differs from cover arity" );
    }
    f |= cube_function( term );
  }
  return f;
}

/*! \brief All prime implicants of f, in ascending cube text order.

  The constant-0 function has none; the constant-1 function has exactly the
  literal-free cube.
*/
inline std::vector<cube> prime_implicants( const truth_table& f )
{
  const auto all = ( uint64_t( 1 ) << f.num_vars() ) - 1u;

  /* cube key: care mask in the high word half, polarity in the low half */
  auto key = []( uint64_t care, uint64_t bits ) { return std::pair<uint64_t, uint64_t>( care, bits ); };

  std::set<std::pair<uint64_t, uint64_t>> current;
  f.for_each_one( [&]( uint64_t m ) { current.insert( key( all, m ) ); } );

  std::vector<cube> primes;
  while ( !current.empty() )
  {
    std::set<std::pair<uint64_t, uint64_t>> next;
    std::map<std::pair<uint64_t, uint64_t>, bool> merged;
    for ( const auto& c : current )
    {
      merged[c] = false;
    }

    for ( const auto& c : current )
    {
      /* try to join with the partner one polarity up on each care bit */
      for ( uint64_t probe = c.first; probe; probe &= probe - 1u )
      {
        const auto bit = probe & ~( probe - 1u );
        if ( c.second & bit )
        {
          continue; /* handled from the 0-polarity side */
        }
        const auto partner = key( c.first, c.second | bit );
        const auto it = merged.find( partner );
        if ( it != merged.end() )
        {
          merged[c] = true;
          it->second = true;
          next.insert( key( c.first & ~bit, c.second & ~bit ) );
        }
      }
    }

    for ( const auto& [k, was_merged] : merged )
    {
      if ( !was_merged )
      {
        primes.emplace_back( f.num_vars(), k.first, k.second );
      }
    }
    current = std::move( next );
  }

  std::sort( primes.begin(), primes.end() );
  return primes;
}

/*! \brief True when the cover realises f and no term or literal can be dropped. */
inline bool verify_irredundant( const truth_table& f, const sop_cover& cover )
{
  if ( cover_function( cover ) != f )
  {
    return false;
  }
  for ( size_t i = 0u; i < cover.terms.size(); ++i )
  {
    /* dropping the whole term must lose a minterm */
    truth_table rest( cover.num_vars );
    for ( size_t j = 0u; j < cover.terms.size(); ++j )
    {
      if ( j != i )
      {
        rest |= cube_function( cover.terms[j] );
      }
    }
    if ( ( cube_function( cover.terms[i] ) & ~rest ).is_const0() )
    {
      return false;
    }
    /* dropping any literal must leave f (term must be prime within f) */
    const auto& term = cover.terms[i];
    for ( uint64_t probe = term.care; probe; probe &= probe - 1u )
    {
      const auto bit = probe & ~( probe - 1u );
      const cube widened( term.num_vars, term.care & ~bit, term.bits & ~bit );
      if ( ( cube_function( widened ) & ~f ).is_const0() )
      {
        return false;
      }
    }
  }
  return true;
}

namespace detail
{

/*! \brief One pruning sweep: drops terms front to back when the rest still covers. */
inline std::vector<cube> prune_cover( const truth_table& f, std::vector<cube> terms )
{
  for ( size_t i = 0u; i < terms.size(); )
  {
    truth_table rest( f.num_vars() );
    for ( size_t j = 0u; j < terms.size(); ++j )
    {
      if ( j != i )
      {
        rest |= cube_function( terms[j] );
      }
    }
    if ( rest == f )
    {
      terms.erase( terms.begin() + static_cast<long>( i ) );
    }
    else
    {
      ++i;
    }
  }
  return terms;
}

} // namespace detail

/*! \brief A deterministic irredundant cover of f built from prime implicants.

  Essential primes enter first; remaining minterms are covered greedily by
  descending fresh coverage with ties broken by cube text order; a final
  sweep removes terms made redundant late.  The constant-0 function yields
  the empty cover.
*/
inline sop_cover irredundant_cover( const truth_table& f )
{
  const auto primes = prime_implicants( f );
  std::vector<truth_table> prime_fns;
  prime_fns.reserve( primes.size() );
  for ( const auto& p : primes )
  {
    prime_fns.push_back( cube_function( p ) );
  }

  std::vector<bool> selected( primes.size(), false );
  truth_table covered( f.num_vars() );

  /* essential primes: sole cover of some true minterm */
  f.for_each_one( [&]( uint64_t m ) {
    size_t hit = primes.size();
    uint32_t hits = 0u;
    for ( size_t i = 0u; i < primes.size() && hits < 2u; ++i )
    {
      if ( primes[i].contains( m ) )
      {
        ++hits;
        hit = i;
      }
    }
    if ( hits == 1u )
    {
      selected[hit] = true;
    }
  } );
  for ( size_t i = 0u; i < primes.size(); ++i )
  {
    if ( selected[i] )
    {
      covered |= prime_fns[i];
    }
  }

  /* greedy completion */
  auto remaining = f & ~covered;
  while ( !remaining.is_const0() )
  {
    size_t best = primes.size();
    uint64_t best_gain = 0u;
    for ( size_t i = 0u; i < primes.size(); ++i )
    {
      if ( selected[i] )
      {
        continue;
      }
      const auto gain = ( prime_fns[i] & remaining ).count_ones();
      if ( gain > best_gain )
      {
        best_gain = gain;
        best = i;
      }
    }
    assert( best < primes.size() ); /* primes always cover f */
    selected[best] = true;
    covered |= prime_fns[best];
    remaining = f & ~covered;
  }

  std::vector<cube> terms;
  for ( size_t i = 0u; i < primes.size(); ++i )
  {
    if ( selected[i] )
    {
      terms.push_back( primes[i] );
    }
  }
  return sop_cover{ f.num_vars(), detail::prune_cover( f, std::move( terms ) ) };
}

/*! \brief Enumerates distinct irredundant covers of f in a fixed order.

  Branches on the lowest uncovered minterm over the primes containing it;
  within one branching step, later choices exclude the earlier alternatives,
  so no prime set is visited twice.  Covers are pruned before emission and
  deduplicated.  Stops after max_covers emissions; returns the number
  emitted.
*/
template<typename Fn>
size_t for_each_irredundant_cover( const truth_table& f, Fn&& fn, size_t max_covers = 64u )
{
  const auto primes = prime_implicants( f );
  std::vector<truth_table> prime_fns;
  prime_fns.reserve( primes.size() );
  for ( const auto& p : primes )
  {
    prime_fns.push_back( cube_function( p ) );
  }

  std::set<std::vector<std::pair<uint64_t, uint64_t>>> seen;
  size_t emitted = 0u;

  std::vector<size_t> chosen;
  std::vector<bool> excluded( primes.size(), false );

  auto emit = [&]( const std::vector<size_t>& indices ) -> bool {
    std::vector<cube> terms;
    for ( auto i : indices )
    {
      terms.push_back( primes[i] );
    }
    terms = detail::prune_cover( f, std::move( terms ) );
    std::sort( terms.begin(), terms.end() );
    std::vector<std::pair<uint64_t, uint64_t>> sig;
    for ( const auto& t : terms )
    {
      sig.emplace_back( t.care, t.bits );
    }
    if ( !seen.insert( sig ).second )
    {
      return emitted < max_covers;
    }
    ++emitted;
    fn( sop_cover{ f.num_vars(), std::move( terms ) } );
    return emitted < max_covers;
  };

  std::function<bool( const truth_table& )> recurse = [&]( const truth_table& covered ) -> bool {
    const auto remaining = f & ~covered;
    if ( remaining.is_const0() )
    {
      return emit( chosen );
    }
    const auto m = remaining.one_indices().front();
    std::vector<size_t> options;
    for ( size_t i = 0u; i < primes.size(); ++i )
    {
      if ( !excluded[i] && primes[i].contains( m ) )
      {
        options.push_back( i );
      }
    }
    bool keep_going = true;
    for ( size_t oi = 0u; oi < options.size() && keep_going; ++oi )
    {
      chosen.push_back( options[oi] );
      keep_going = recurse( covered | prime_fns[options[oi]] );
      chosen.pop_back();
      excluded[options[oi]] = true;
    }
    for ( auto i : options )
    {
      excluded[i] = false;
    }
    return keep_going;
  };

  if ( f.is_const0() )
  {
    fn( sop_cover{ f.num_vars(), {} } );
    return 1u;
  }
  recurse( truth_table( f.num_vars() ) );
  return emitted;
}

/*! \brief The unique irredundant cover of a root function: all minterm cubes.

  Isolation makes every true minterm its own prime implicant.
*/
inline sop_cover root_cover( const truth_table& root )
{
  sop_cover cover{ root.num_vars(), {} };
  root.for_each_one( [&]( uint64_t m ) {
    cover.terms.push_back( cube::minterm_cube( root.num_vars(), m ) );
  } );
  return cover;
}

} // namespace rootfn
