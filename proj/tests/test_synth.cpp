#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <rootfn/construct.hpp>
#include <rootfn/io.hpp>
#include <rootfn/properties.hpp>
#include <rootfn/synth.hpp>

using namespace rootfn;

namespace
{

void check_valid( const fault_scenario& s, const truth_table& target )
{
  CHECK( is_root( s.root ) );
  CHECK( fault_free_function( s.circuit ) == s.root );
  CHECK( s.response == target );
  CHECK( simulate( s.circuit, s.faults ) == target );

  /* grown and killed partition the root's minterms */
  auto minterms = s.grown_minterms;
  minterms.insert( minterms.end(), s.killed_minterms.begin(), s.killed_minterms.end() );
  std::sort( minterms.begin(), minterms.end() );
  CHECK( minterms == s.root.one_indices() );

  /* killed gates carry OR-input stuck-at-0 faults */
  for ( const auto m : s.killed_minterms )
  {
    uint32_t gate = 0u;
    while ( s.circuit.gates[gate].bits != m )
    {
      ++gate;
    }
    CHECK( s.faults.at( { fault_site::kind_t::or_input, gate, 0u } ) == false );
  }
}

} // namespace

TEST_CASE( "a root target is its own fault-free scenario", "[synth]" )
{
  const auto root = catalog( 4u )[3].function; /* five-minterm */
  const auto s = synthesize_fault_scenario( root );
  CHECK( s.root == root );
  CHECK( s.faults.empty() );
  CHECK( s.grown_minterms == root.one_indices() );
  CHECK( s.killed_minterms.empty() );
  check_valid( s, root );
}

TEST_CASE( "the constant-0 target kills a whole root circuit", "[synth]" )
{
  const auto zero4 = truth_table::constant( 4u, false );
  const auto s = synthesize_fault_scenario( zero4 );
  CHECK( s.root == catalog( 4u )[0].function );
  CHECK( s.grown_minterms.empty() );
  CHECK( s.killed_minterms == s.root.one_indices() );
  CHECK( s.faults.size() == s.circuit.gates.size() );
  check_valid( s, zero4 );

  const auto s1 = synthesize_fault_scenario( truth_table::constant( 1u, false ) );
  CHECK( s1.root == truth_table::from_minterms( 1u, { 0u } ) );
  check_valid( s1, truth_table::constant( 1u, false ) );

  const auto s8 = synthesize_fault_scenario( truth_table::constant( 8u, false ) );
  CHECK( s8.root == parity_function( 8u, false ) );
  CHECK( s8.killed_minterms.size() == 128u );
  check_valid( s8, truth_table::constant( 8u, false ) );
}

TEST_CASE( "the worked faulty response synthesises deterministically", "[synth]" )
{
  const auto target = parse_table( "n=4:a88f" );
  const auto s = synthesize_fault_scenario( target );

  CHECK( to_minterm_string( s.root ) == "0000,0011,0110,1010,1101" );
  CHECK( format_circuit( s.circuit ) == "0000\n0011\n0110\n1010\n1101\n" );
  CHECK( s.grown_minterms == std::vector<uint64_t>{ 0u, 3u, 13u } );
  CHECK( s.killed_minterms == std::vector<uint64_t>{ 6u, 10u } );
  CHECK( format_fault_lines( s.faults ) == "branch:0,1=0\n"
                                           "branch:0,2=0\n"
                                           "branch:1,3=0\n"
                                           "branch:1,4=0\n"
                                           "branch:4,2=0\n"
                                           "orin:2=0\n"
                                           "orin:3=0\n" );
  check_valid( s, target );

  /* re-running gives exactly the same scenario */
  const auto again = synthesize_fault_scenario( target );
  CHECK( again.root == s.root );
  CHECK( again.faults == s.faults );
}

TEST_CASE( "every arity-3 function admits a fault scenario", "[synth]" )
{
  for ( uint64_t m = 0u; m < 256u; ++m )
  {
    const auto target = truth_table::from_uint( 3u, m );
    INFO( "target " << to_hex_string( target ) );
    check_valid( synthesize_fault_scenario( target ), target );
  }
}

TEST_CASE( "sampled arity-4 targets admit fault scenarios", "[synth]" )
{
  std::mt19937_64 rng( 7u );
  for ( int i = 0; i < 300; ++i )
  {
    const auto target = truth_table::from_uint( 4u, rng() & 0xffffu );
    INFO( "target " << to_hex_string( target ) );
    check_valid( synthesize_fault_scenario( target ), target );
  }
}
