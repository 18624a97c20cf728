/*!
  \file fault_walkthrough.cpp
  \brief Faults a root circuit into an arbitrary function and back

  Builds the five-minterm arity-4 root's AND-OR circuit, injects a set of
  stuck-at faults that grows three gates and kills two, and prints the
  faulty response.  Then runs the synthesiser on that response to recover a
  (different) root circuit plus fault assignment realising it, showing that
  the response is reachable from a fault-free root in both directions.
*/

#include <cstdio>

#include <rootfn/rootfn.hpp>

using namespace rootfn;

int main()
{
  const auto root = truth_table::from_minterms( 4u, { 0b0000, 0b0111, 0b1011, 0b1101, 0b1110 } );
  const auto circuit = build_circuit( root_cover( root ) );

  std::printf( "root %s, circuit:\n%s", to_hex_string( root ).c_str(),
               format_circuit( circuit ).c_str() );

  const auto faults = parse_fault_lines( "branch:0,1=0\nbranch:0,2=0\nbranch:2,4=1\n"
                                         "branch:2,3=0\nbranch:3,2=0\norin:1=0\norin:4=0\n" );
  const auto response = simulate( circuit, faults );
  std::printf( "\nfaults:\n%sresponse %s = {%s}\n", format_fault_lines( faults ).c_str(),
               to_hex_string( response ).c_str(), to_minterm_string( response ).c_str() );
  std::printf( "response is %sa root\n", is_root( response ) ? "" : "not " );

  const auto scenario = synthesize_fault_scenario( response );
  std::printf( "\nsynthesised root %s, faults:\n%s",
               to_minterm_string( scenario.root ).c_str(),
               format_fault_lines( scenario.faults ).c_str() );
  std::printf( "round trip %s\n",
               simulate( scenario.circuit, scenario.faults ) == response ? "ok" : "FAILED" );
  return 0;
}
