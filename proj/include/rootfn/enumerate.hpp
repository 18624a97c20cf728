/*!
  \file enumerate.hpp
  \brief Exhaustive enumeration of root functions

  The true minterm sets of arity-n root functions are exactly the maximal
  independent sets of the hypercube Q_n, so enumeration walks a binary
  decision tree over the vertices 0 .. 2^n - 1 in ascending order: each
  vertex is either chosen (if no neighbour was chosen before) or excluded.
  A branch dies as soon as some decided vertex can no longer be dominated,
  i.e. it is not dominated yet and has no undecided, unblocked neighbour
  left.  Every surviving leaf with full domination is a root function.

  Roots are reported in the order the search finds them.  That order is a
  pure function of the arity: running with several jobs splits the tree at a
  fixed prefix depth, buffers each subtree, and replays the buffers in tree
  order, so the stream is byte-identical to a single-job run.

  Enumeration is guarded to arity 8; counts explode beyond that.
*/

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <thread>
#include <vector>

#include "truth_table.hpp"

namespace rootfn
{

/*! \brief Tuning knobs for enumeration; jobs = 0 uses all hardware threads. */
struct enumerate_options
{
  unsigned jobs = 1u;
};

namespace detail
{

template<unsigned W>
using vertex_set = std::array<uint64_t, W>;

template<unsigned W>
inline bool test_vertex( const vertex_set<W>& s, uint32_t v )
{
  return ( s[v >> 6u] >> ( v & 63u ) ) & 1u;
}

template<unsigned W>
inline void set_vertex( vertex_set<W>& s, uint32_t v )
{
  s[v >> 6u] |= uint64_t( 1 ) << ( v & 63u );
}

template<unsigned W>
inline void merge( vertex_set<W>& into, const vertex_set<W>& other )
{
  for ( unsigned i = 0u; i < W; ++i )
  {
    into[i] |= other[i];
  }
}

template<unsigned W>
inline uint32_t popcount( const vertex_set<W>& s )
{
  uint32_t sum = 0u;
  for ( unsigned i = 0u; i < W; ++i )
  {
    sum += static_cast<uint32_t>( __builtin_popcountll( s[i] ) );
  }
  return sum;
}

/*! \brief Depth-first search for maximal independent sets of Q_n.

  W is the number of 64-bit words needed for one vertex set.
*/
template<unsigned W>
class mis_search
{
public:
  explicit mis_search( uint32_t num_vars )
      : _verts( uint32_t( 1 ) << num_vars ), _neigh( _verts )
  {
    for ( uint32_t v = 0u; v < _verts; ++v )
    {
      for ( uint32_t i = 0u; i < num_vars; ++i )
      {
        set_vertex<W>( _neigh[v], v ^ ( uint32_t( 1 ) << i ) );
      }
    }
    for ( uint32_t v = 0u; v < _verts; ++v )
    {
      set_vertex<W>( _full, v );
    }
  }

  struct state
  {
    vertex_set<W> chosen{};
    vertex_set<W> blocked{};
    vertex_set<W> dominated{};
  };

  /*! \brief Runs the search; sink receives every maximal independent set. */
  template<typename Sink>
  void run( Sink&& sink, unsigned jobs ) const
  {
    const state init{};
    if ( jobs == 0u )
    {
      jobs = std::max( 1u, std::thread::hardware_concurrency() );
    }
    if ( jobs == 1u || _verts <= split_depth )
    {
      auto& out = sink;
      dfs( 0u, init, out );
      return;
    }

    std::vector<state> tasks;
    collect( 0u, init, tasks );
    std::vector<std::vector<vertex_set<W>>> buffers( tasks.size() );
    std::atomic<size_t> next{ 0u };
    const auto workers = std::min<size_t>( jobs, tasks.size() );
    std::vector<std::thread> pool;
    pool.reserve( workers );
    for ( size_t t = 0u; t < workers; ++t )
    {
      pool.emplace_back( [&]() {
        size_t i;
        while ( ( i = next.fetch_add( 1u ) ) < tasks.size() )
        {
          auto& buffer = buffers[i];
          auto append = [&buffer]( const vertex_set<W>& s ) { buffer.push_back( s ); };
          dfs( split_depth, tasks[i], append );
        }
      } );
    }
    for ( auto& t : pool )
    {
      t.join();
    }
    for ( const auto& buffer : buffers )
    {
      for ( const auto& s : buffer )
      {
        sink( s );
      }
    }
  }

private:
  static constexpr uint32_t split_depth = 8u;

  template<typename Sink>
  void dfs( uint32_t v, const state& s, Sink& sink ) const
  {
    if ( v == _verts )
    {
      if ( s.dominated == _full )
      {
        sink( s.chosen );
      }
      return;
    }
    if ( !test_vertex<W>( s.blocked, v ) )
    {
      state t = s;
      set_vertex<W>( t.chosen, v );
      set_vertex<W>( t.dominated, v );
      merge<W>( t.blocked, _neigh[v] );
      merge<W>( t.dominated, _neigh[v] );
      dfs( v + 1u, t, sink );
    }
    if ( exclude_feasible( v, s ) )
    {
      dfs( v + 1u, s, sink );
    }
  }

  /* True when, after excluding v, every decided undominated vertex still has
     an undecided unblocked neighbour that could dominate it later. */
  bool exclude_feasible( uint32_t v, const state& s ) const
  {
    for ( unsigned wi = 0u; wi < W; ++wi )
    {
      const auto decided = decided_mask( wi, v );
      auto need = ~s.dominated[wi] & decided;
      while ( need )
      {
        const auto u = ( wi << 6u ) + static_cast<uint32_t>( __builtin_ctzll( need ) );
        need &= need - 1u;
        bool found = false;
        for ( unsigned wj = 0u; wj < W; ++wj )
        {
          if ( _neigh[u][wj] & ~decided_mask( wj, v ) & ~s.blocked[wj] & _full[wj] )
          {
            found = true;
            break;
          }
        }
        if ( !found )
        {
          return false;
        }
      }
    }
    return true;
  }

  /* Bits of word wi covering vertices 0 .. v (inclusive). */
  static uint64_t decided_mask( unsigned wi, uint32_t v )
  {
    const auto base = uint32_t( wi ) << 6u;
    if ( v + 1u <= base )
    {
      return 0u;
    }
    const auto count = v + 1u - base;
    return count >= 64u ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << count ) - 1u );
  }

  void collect( uint32_t v, const state& s, std::vector<state>& tasks ) const
  {
    if ( v == split_depth )
    {
      tasks.push_back( s );
      return;
    }
    if ( !test_vertex<W>( s.blocked, v ) )
    {
      state t = s;
      set_vertex<W>( t.chosen, v );
      set_vertex<W>( t.dominated, v );
      merge<W>( t.blocked, _neigh[v] );
      merge<W>( t.dominated, _neigh[v] );
      collect( v + 1u, t, tasks );
    }
    if ( exclude_feasible( v, s ) )
    {
      collect( v + 1u, s, tasks );
    }
  }

  uint32_t _verts;
  std::vector<vertex_set<W>> _neigh;
  vertex_set<W> _full{};
};

template<typename Sink>
void enumerate_vertex_sets( uint32_t num_vars, Sink&& sink, const enumerate_options& opts )
{
  if ( num_vars == 0u )
  {
    throw std::invalid_argument( "enumerate_roots: arity must be at least 1" );
  }
  if ( num_vars > 8u )
  {
    throw resource_error( "enumerate_roots: enumeration is guarded to arity 8" );
  }
  if ( num_vars <= 6u )
  {
    mis_search<1u>( num_vars ).run( [&]( const vertex_set<1u>& s ) { sink( s.data(), 1u ); }, opts.jobs );
  }
  else if ( num_vars == 7u )
  {
    mis_search<2u>( num_vars ).run( [&]( const vertex_set<2u>& s ) { sink( s.data(), 2u ); }, opts.jobs );
  }
  else
  {
    mis_search<4u>( num_vars ).run( [&]( const vertex_set<4u>& s ) { sink( s.data(), 4u ); }, opts.jobs );
  }
}

} // namespace detail

/*! \brief Enumerates every arity-n root function in a fixed search order.

  The callback order is deterministic for a given arity, independent of the
  number of jobs.
*/
inline void enumerate_roots( uint32_t num_vars,
                             const std::function<void( const truth_table& )>& fn,
                             const enumerate_options& opts = {} )
{
  detail::enumerate_vertex_sets( num_vars, [&]( const uint64_t* words, unsigned count ) {
    truth_table tt( num_vars );
    for ( unsigned i = 0u; i < count && i < tt.word_count(); ++i )
    {
      tt.set_word( i, words[i] );
    }
    fn( tt );
  }, opts );
}

/*! \brief Root counts of one arity, split by number of true minterms. */
struct root_census
{
  uint32_t num_vars;
  std::map<uint64_t, uint64_t> by_cardinality;
  uint64_t total;
};

/*! \brief Counts all arity-n root functions by cardinality. */
inline root_census census( uint32_t num_vars, const enumerate_options& opts = {} )
{
  root_census result{ num_vars, {}, 0u };
  detail::enumerate_vertex_sets( num_vars, [&]( const uint64_t* words, unsigned count ) {
    uint64_t ones = 0u;
    for ( unsigned i = 0u; i < count; ++i )
    {
      ones += static_cast<uint64_t>( __builtin_popcountll( words[i] ) );
    }
    ++result.by_cardinality[ones];
    ++result.total;
  }, opts );
  return result;
}

/*! \brief Cardinalities between the smallest and largest attained that no root has.

  The theoretical lower bound can fall below the smallest attained
  cardinality (at arity 5 the bound is 6 but the smallest root has 8
  minterms); gaps are reported within the attained range only.
*/
inline std::vector<uint64_t> missing_cardinalities( const root_census& c )
{
  std::vector<uint64_t> missing;
  if ( c.by_cardinality.empty() )
  {
    return missing;
  }
  const auto low = c.by_cardinality.begin()->first;
  const auto high = c.by_cardinality.rbegin()->first;
  for ( auto k = low; k <= high; ++k )
  {
    if ( c.by_cardinality.find( k ) == c.by_cardinality.end() )
    {
      missing.push_back( k );
    }
  }
  return missing;
}

} // namespace rootfn
