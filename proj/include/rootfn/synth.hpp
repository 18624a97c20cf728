/*!
  \file synth.hpp
  \brief Synthesis of fault scenarios: any function as a faulted root circuit

  Given a target function F, the synthesiser produces a root function R, its
  minterm-cube circuit, and a stuck-at fault assignment under which the
  circuit outputs exactly F.  The construction inverts the fault mechanics:

  1. take an irredundant cover of F;
  2. pick one representative true minterm per cover term, pairwise at
     Hamming distance at least 2 (an independent set S of the hypercube);
  3. extend S greedily to a maximal independent set R, i.e. a root;
  4. grow each representative's gate to its cover term by sticking the
     dropped branches at the representative's polarities, and kill the gates
     of the minterms added in step 3 with OR-input stuck-at-0 faults.

  Every gate is then either grown to a cover term or dead, so the response
  is exactly the cover, i.e. F.  Step 2 uses backtracking over terms sorted
  by size (smallest first, ties by cube order) with candidate minterms tried
  in ascending order; if no representative system exists for the cover, the
  next irredundant cover is tried.  The whole procedure is deterministic.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "construct.hpp"
#include "properties.hpp"
#include "sop.hpp"
#include "truth_table.hpp"

namespace rootfn
{

/*! \brief Raised when no fault scenario could be synthesised. */
class synthesis_error : public std::runtime_error
{
public:
  synthesis_error( const std::string& message, size_t covers_tried )
      : std::runtime_error( message ), covers_tried( covers_tried )
  {
  }

  size_t covers_tried; /*!< irredundant covers examined before giving up */
};

/*! \brief A root circuit plus faults realising a target function. */
struct fault_scenario
{
  truth_table root;           /*!< fault-free function of the circuit */
  two_level_circuit circuit;  /*!< minterm-cube circuit of the root */
  fault_assignment faults;
  truth_table response;       /*!< simulate(circuit, faults); the target */

  /*! \brief Root minterms whose gates are grown to cover terms. */
  std::vector<uint64_t> grown_minterms;

  /*! \brief Root minterms whose gates are killed. */
  std::vector<uint64_t> killed_minterms;
};

namespace detail
{

/*! \brief One representative minterm per term, pairwise Hamming distance >= 2. */
inline std::optional<std::vector<uint64_t>> select_representatives( const sop_cover& cover )
{
  const auto k = cover.terms.size();
  std::vector<size_t> order( k );
  for ( size_t i = 0u; i < k; ++i )
  {
    order[i] = i;
  }
  std::sort( order.begin(), order.end(), [&]( size_t a, size_t b ) {
    const auto ca = cover.terms[a].covered_count();
    const auto cb = cover.terms[b].covered_count();
    if ( ca != cb )
    {
      return ca < cb;
    }
    return cover.terms[a] < cover.terms[b];
  } );

  std::vector<std::vector<uint64_t>> candidates( k );
  for ( size_t i = 0u; i < k; ++i )
  {
    for_each_cube_minterm( cover.terms[order[i]], [&]( uint64_t m ) { candidates[i].push_back( m ); } );
  }

  std::vector<uint64_t> picked( k, 0u );
  std::function<bool( size_t )> place = [&]( size_t level ) -> bool {
    if ( level == k )
    {
      return true;
    }
    for ( const auto m : candidates[level] )
    {
      bool ok = true;
      for ( size_t j = 0u; j < level && ok; ++j )
      {
        ok = __builtin_popcountll( picked[j] ^ m ) >= 2;
      }
      if ( ok )
      {
        picked[level] = m;
        if ( place( level + 1u ) )
        {
          return true;
        }
      }
    }
    return false;
  };

  if ( !place( 0u ) )
  {
    return std::nullopt;
  }

  /* map back to cover term order */
  std::vector<uint64_t> reps( k );
  for ( size_t i = 0u; i < k; ++i )
  {
    reps[order[i]] = picked[i];
  }
  return reps;
}

/*! \brief Greedy ascending completion of an independent set to a maximal one. */
inline std::vector<uint64_t> complete_to_root( uint32_t num_vars, const std::vector<uint64_t>& seed )
{
  truth_table chosen = truth_table::from_minterms( num_vars, seed );
  std::vector<uint64_t> added;
  for ( uint64_t v = 0u; v < chosen.num_bits(); ++v )
  {
    if ( chosen.get_bit( v ) )
    {
      continue;
    }
    bool independent = true;
    for ( uint32_t i = 0u; i < num_vars && independent; ++i )
    {
      independent = !chosen.get_bit( v ^ ( uint64_t( 1 ) << i ) );
    }
    if ( independent )
    {
      chosen.set_bit( v );
      added.push_back( v );
    }
  }
  return added;
}

inline fault_scenario assemble_scenario( const truth_table& target, const sop_cover& cover,
                                         const std::vector<uint64_t>& reps )
{
  auto killed = complete_to_root( target.num_vars(), reps );
  auto grown = reps;
  std::sort( grown.begin(), grown.end() );

  std::vector<uint64_t> root_minterms = grown;
  root_minterms.insert( root_minterms.end(), killed.begin(), killed.end() );
  std::sort( root_minterms.begin(), root_minterms.end() );

  const auto root = truth_table::from_minterms( target.num_vars(), root_minterms );
  const auto circuit = build_circuit( root_cover( root ) );

  auto gate_of = [&]( uint64_t m ) -> uint32_t {
    const auto it = std::lower_bound( root_minterms.begin(), root_minterms.end(), m );
    return static_cast<uint32_t>( it - root_minterms.begin() );
  };

  fault_assignment faults;
  for ( size_t t = 0u; t < cover.terms.size(); ++t )
  {
    const auto& term = cover.terms[t];
    const auto rep = reps[t];
    const auto gate = gate_of( rep );
    const auto all = ( uint64_t( 1 ) << target.num_vars() ) - 1u;
    for ( auto drop = all & ~term.care; drop; drop &= drop - 1u )
    {
      const auto bit = drop & ~( drop - 1u );
      const auto var = static_cast<uint32_t>( __builtin_ctzll( bit ) ) + 1u;
      /* stick the branch at the representative's polarity: the literal
         evaluates to 1 and falls out of the gate */
      faults[{ fault_site::kind_t::branch, gate, var }] = ( rep & bit ) != 0u;
    }
  }
  for ( const auto m : killed )
  {
    faults[{ fault_site::kind_t::or_input, gate_of( m ), 0u }] = false;
  }

  fault_scenario scenario{ root, circuit, std::move( faults ), target, std::move( grown ), std::move( killed ) };
  if ( !is_root( scenario.root ) || simulate( scenario.circuit, scenario.faults ) != target )
  {
    throw std::logic_error( "synthesize_fault_scenario: assembled scenario failed validation" );
  }
  return scenario;
}

} // namespace detail

/*! \brief Synthesises a root circuit and fault assignment realising the target.

  Special cases: a target that is itself a root maps to its own fault-free
  circuit; the constant-0 target maps to a small root with every OR input
  stuck at 0 (the catalog minimum root where available).  Everything else
  goes through cover-based synthesis; if no irredundant cover of the target
  admits a representative system, synthesis_error is thrown.
*/
inline fault_scenario synthesize_fault_scenario( const truth_table& target )
{
  const auto n = target.num_vars();

  if ( target.is_const0() )
  {
    truth_table root = ( n >= 2u && n <= 7u )
                           ? catalog( n ).front().function
                           : ( n == 1u ? truth_table::from_minterms( 1u, { 0u } )
                                       : parity_function( n, false ) );
    const auto circuit = build_circuit( root_cover( root ) );
    fault_assignment faults;
    std::vector<uint64_t> killed;
    for ( uint32_t g = 0u; g < circuit.gates.size(); ++g )
    {
      faults[{ fault_site::kind_t::or_input, g, 0u }] = false;
      killed.push_back( circuit.gates[g].bits );
    }
    return fault_scenario{ root, circuit, std::move( faults ), target, {}, std::move( killed ) };
  }

  if ( is_root( target ) )
  {
    return fault_scenario{ target, build_circuit( root_cover( target ) ), {}, target,
                           target.one_indices(), {} };
  }

  std::optional<fault_scenario> result;
  size_t covers_tried = 1u;

  /* the deterministic cover first, alternative covers only as a fallback */
  const auto primary = irredundant_cover( target );
  if ( const auto reps = detail::select_representatives( primary ) )
  {
    result = detail::assemble_scenario( target, primary, *reps );
  }
  if ( !result )
  {
    auto primary_terms = primary.terms;
    std::sort( primary_terms.begin(), primary_terms.end() );
    for_each_irredundant_cover( target, [&]( const sop_cover& cover ) {
      if ( result || cover.terms == primary_terms )
      {
        return;
      }
      ++covers_tried;
      if ( const auto reps = detail::select_representatives( cover ) )
      {
        result = detail::assemble_scenario( target, cover, *reps );
      }
    } );
  }

  if ( !result )
  {
    throw synthesis_error( "synthesize_fault_scenario: no irredundant cover of the target admits "
                           "representatives at pairwise distance 2 (" +
                               std::to_string( covers_tried ) + " covers tried)",
                           covers_tried );
  }
  return *result;
}

} // namespace rootfn
