/*!
  \file acceptance.cpp
  \brief End-to-end acceptance gate: one pass/fail line per criterion

  Runs the ten headline checks of the library against frozen expected
  values: the census table, minimum and missing cardinalities, oracle
  equivalence of the enumerator, lift fixtures, the fault-immunity audits,
  the worked fault scenario plus full arity-4 synthesis, the two universal
  module experiments, and four randomized property suites.  Prints one line
  per criterion and exits nonzero when any of them fails.
*/

#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <rootfn/rootfn.hpp>

using namespace rootfn;

namespace
{

int failures = 0;

void report( int criterion, const std::string& what, bool pass, const std::string& detail = "" )
{
  std::printf( "%s criterion-%d %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
               detail.empty() ? "" : ": ", detail.c_str() );
  if ( !pass )
  {
    ++failures;
  }
}

/* ------------------------------------------------------------------ */

bool check_census( const std::map<uint32_t, root_census>& censuses )
{
  const std::map<uint32_t, uint64_t> totals{
    { 2u, 2u }, { 3u, 6u }, { 4u, 42u }, { 5u, 1670u }, { 6u, 1281402u } };
  for ( const auto& [n, expected] : totals )
  {
    if ( censuses.at( n ).total != expected )
    {
      return false;
    }
  }

  const std::map<uint64_t, uint64_t> split4{ { 4u, 24u }, { 5u, 16u }, { 8u, 2u } };
  const std::map<uint64_t, uint64_t> split5{
    { 8u, 1140u }, { 9u, 320u }, { 10u, 176u }, { 12u, 32u }, { 16u, 2u } };
  const std::map<uint64_t, uint64_t> split6{
    { 12u, 320u }, { 14u, 9600u }, { 15u, 25920u }, { 16u, 736440u }, { 17u, 337920u },
    { 18u, 116320u }, { 19u, 40320u }, { 20u, 8320u }, { 21u, 3840u }, { 22u, 1856u },
    { 24u, 480u }, { 27u, 64u }, { 32u, 2u } };
  return censuses.at( 4u ).by_cardinality == split4 &&
         censuses.at( 5u ).by_cardinality == split5 &&
         censuses.at( 6u ).by_cardinality == split6;
}

bool check_min_cardinalities( const std::map<uint32_t, root_census>& censuses )
{
  const std::vector<uint64_t> expected{ 1u, 2u, 2u, 4u, 8u, 12u };
  for ( uint32_t n = 1u; n <= 6u; ++n )
  {
    const auto& by_card = censuses.at( n ).by_cardinality;
    if ( by_card.empty() || by_card.begin()->first != expected[n - 1u] )
    {
      return false;
    }
  }
  return true;
}

bool check_missing_cardinalities( const std::map<uint32_t, root_census>& censuses )
{
  return missing_cardinalities( censuses.at( 4u ) ) == std::vector<uint64_t>{ 6u, 7u } &&
         missing_cardinalities( censuses.at( 5u ) ) ==
             std::vector<uint64_t>{ 11u, 13u, 14u, 15u } &&
         missing_cardinalities( censuses.at( 6u ) ) ==
             std::vector<uint64_t>{ 13u, 23u, 25u, 26u, 28u, 29u, 30u, 31u };
}

bool check_oracle_equivalence()
{
  for ( uint32_t n = 1u; n <= 4u; ++n )
  {
    std::set<uint64_t> enumerated;
    enumerate_roots( n, [&]( const truth_table& r ) { enumerated.insert( r.to_uint() ); } );

    std::set<uint64_t> brute;
    for ( uint64_t m = 0u; m < ( uint64_t( 1 ) << ( 1u << n ) ); ++m )
    {
      if ( is_root( truth_table::from_uint( n, m ) ) )
      {
        brute.insert( m );
      }
    }
    if ( enumerated != brute )
    {
      return false;
    }
  }
  return true;
}

bool check_lift()
{
  const auto base = truth_table::from_minterms( 3u, { 0b000, 0b111 } );
  const auto four = lift( base, 2u );
  if ( four != truth_table::from_minterms( 4u, { 0b0000, 0b0111, 0b1101, 0b1010 } ) )
  {
    return false;
  }
  if ( lift( four, 1u ) != catalog( 5u ).front().function )
  {
    return false;
  }

  for ( uint32_t n = 1u; n <= 4u; ++n )
  {
    bool ok = true;
    enumerate_roots( n, [&]( const truth_table& r ) {
      for ( uint32_t var = 1u; var <= n && ok; ++var )
      {
        const auto up = lift( r, var );
        ok = is_root( up ) && up.count_ones() == 2u * r.count_ones();
      }
    } );
    if ( !ok )
    {
      return false;
    }
  }
  return true;
}

bool check_audits( std::string& detail )
{
  const auto three = fault_immunity_audit( 3u );
  const auto four = fault_immunity_audit( 4u );
  std::ostringstream out;
  out << three.roots_checked << " roots / " << three.responses_checked << " responses at n=3, "
      << four.roots_checked << " roots / " << four.responses_checked << " responses at n=4";
  detail = out.str();
  return three.pass && three.roots_checked == 6u && three.responses_checked == 526u &&
         four.pass && four.roots_checked == 42u && four.responses_checked == 364538u;
}

bool check_worked_scenario( std::string& detail )
{
  /* simulate direction: the five-minterm root under the published faults */
  const auto root =
      truth_table::from_minterms( 4u, { 0b0000, 0b0111, 0b1011, 0b1101, 0b1110 } );
  const auto circuit = build_circuit( root_cover( root ) );
  const auto faults = parse_fault_lines( "branch:0,1=0\nbranch:0,2=0\nbranch:2,4=1\n"
                                         "branch:2,3=0\nbranch:3,2=0\norin:1=0\norin:4=0\n" );

  std::set<uint64_t> grown_gates, killed_gates;
  for ( const auto& [site, value] : faults )
  {
    if ( site.kind == fault_site::kind_t::branch )
    {
      grown_gates.insert( circuit.gates[site.gate].bits );
    }
    else if ( site.kind == fault_site::kind_t::or_input && !value )
    {
      killed_gates.insert( circuit.gates[site.gate].bits );
    }
  }
  const auto response = simulate( circuit, faults );
  if ( to_hex_string( response ) != "n=4:a88f" ||
       grown_gates != std::set<uint64_t>{ 0b0000, 0b1011, 0b1101 } ||
       killed_gates != std::set<uint64_t>{ 0b0111, 0b1110 } )
  {
    detail = "published fault list does not reproduce the worked response";
    return false;
  }

  /* synthesis direction: the response round-trips through a valid scenario */
  const auto scenario = synthesize_fault_scenario( response );
  if ( !is_root( scenario.root ) || simulate( scenario.circuit, scenario.faults ) != response ||
       to_minterm_string( scenario.root ) != "0000,0011,0110,1010,1101" )
  {
    detail = "synthesised scenario for the worked response is invalid";
    return false;
  }

  /* full sweep: every arity-4 function admits a scenario */
  for ( uint64_t m = 0u; m < 65536u; ++m )
  {
    const auto target = truth_table::from_uint( 4u, m );
    try
    {
      const auto s = synthesize_fault_scenario( target );
      if ( !is_root( s.root ) || simulate( s.circuit, s.faults ) != target )
      {
        detail = "invalid scenario for target " + to_hex_string( target );
        return false;
      }
    }
    catch ( const synthesis_error& e )
    {
      detail = "counterexample " + to_hex_string( target ) + " (" + e.what() + ")";
      return false;
    }
  }
  detail = "worked scenario reproduced; 65536/65536 arity-4 targets synthesised";
  return true;
}

bool check_universal_pair( std::string& detail )
{
  const auto report = universal_pair_experiment();
  std::ostringstream out;
  out << report.covered_nonroots_a << " and " << report.covered_nonroots_b
      << " non-roots covered, " << report.covered_total << "/256 total";
  detail = out.str();
  return report.reachable_a == 44u && report.reachable_b == 175u &&
         report.covered_nonroots_a == 118u && report.covered_nonroots_b == 250u &&
         report.covered_total == 256u && report.covers_all;
}

bool check_universal_triple( std::string& detail )
{
  const auto report = universal_triple_search();
  std::ostringstream out;
  out << "triple";
  for ( const auto& rep : report.class_representatives )
  {
    out << " " << to_hex_string( rep );
  }
  out << " covers " << report.covered_total << "/65536";
  detail = out.str();
  return report.root_class_count == 3u && report.class_sizes == std::vector<size_t>{ 24u, 16u, 2u } &&
         report.closure_sizes == std::vector<size_t>{ 32030u, 48058u, 62680u } &&
         report.covered_total == 65536u && report.covers_all;
}

/* ------------------------------------------------------------------ */

constexpr int suite_cases = 1000;

uint64_t suite_complement_closure()
{
  std::mt19937_64 rng( 101u );
  std::map<uint32_t, std::vector<truth_table>> pools;
  for ( uint32_t n = 2u; n <= 5u; ++n )
  {
    enumerate_roots( n, [&]( const truth_table& r ) { pools[n].push_back( r ); } );
  }
  uint64_t violations = 0u;
  for ( int i = 0; i < suite_cases; ++i )
  {
    const auto n = 2u + static_cast<uint32_t>( rng() % 4u );
    const auto& pool = pools[n];
    const auto& root = pool[rng() % pool.size()];
    if ( !is_root( flip_variable( root, 1u + static_cast<uint32_t>( rng() % n ) ) ) )
    {
      ++violations;
    }
  }
  return violations;
}

uint64_t suite_fault_monotonicity()
{
  /* an extra branch fault stuck at the literal's polarity can only add
     minterms; stuck against the polarity, or an extra OR-side stuck-at-0,
     can only remove them */
  std::mt19937_64 rng( 202u );
  uint64_t violations = 0u;
  int done = 0;
  while ( done < suite_cases )
  {
    const auto n = 2u + static_cast<uint32_t>( rng() % 3u );
    const auto bits = uint64_t( 1 ) << n;
    const auto f = truth_table::from_uint( n, rng() & ( ( uint64_t( 1 ) << bits ) - 1u ) );
    if ( f.is_const0() )
    {
      continue;
    }
    const auto circuit = build_circuit( irredundant_cover( f ) );

    fault_assignment base;
    for ( const auto& site : fault_sites( circuit ) )
    {
      if ( rng() % 4u == 0u )
      {
        base[site] = rng() % 2u == 0u;
      }
    }

    /* collect unassigned candidate sites for the extra fault */
    std::vector<fault_site> free_sites;
    for ( const auto& site : fault_sites( circuit ) )
    {
      if ( site.kind != fault_site::kind_t::stem && base.find( site ) == base.end() )
      {
        free_sites.push_back( site );
      }
    }
    if ( free_sites.empty() )
    {
      continue;
    }
    const auto& extra = free_sites[rng() % free_sites.size()];

    bool value, expect_superset;
    switch ( extra.kind )
    {
    case fault_site::kind_t::branch:
    {
      const bool polarity = ( circuit.gates[extra.gate].bits >> ( extra.var - 1u ) ) & 1u;
      expect_superset = rng() % 2u == 0u;
      value = expect_superset ? polarity : !polarity;
      break;
    }
    case fault_site::kind_t::or_input:
    case fault_site::kind_t::or_output:
    default:
      value = rng() % 2u == 0u;
      expect_superset = value;
      break;
    }

    const auto before = simulate( circuit, base );
    auto with_extra = base;
    with_extra[extra] = value;
    const auto after = simulate( circuit, with_extra );

    const auto monotone = expect_superset ? ( before & ~after ).is_const0()
                                          : ( after & ~before ).is_const0();
    if ( !monotone )
    {
      ++violations;
    }
    ++done;
  }
  return violations;
}

uint64_t suite_sop_round_trip()
{
  std::mt19937_64 rng( 303u );
  uint64_t violations = 0u;
  for ( int i = 0; i < suite_cases; ++i )
  {
    const auto n = 1u + static_cast<uint32_t>( rng() % 5u );
    const auto bits = uint64_t( 1 ) << n;
    const auto mask = bits == 64u ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << bits ) - 1u );
    const auto f = truth_table::from_uint( n, rng() & mask );
    const auto cover = irredundant_cover( f );
    if ( cover_function( cover ) != f || !verify_irredundant( f, cover ) )
    {
      ++violations;
    }
  }
  return violations;
}

uint64_t suite_root_orbit_invariance()
{
  std::mt19937_64 rng( 404u );
  std::map<uint32_t, std::vector<np_transform>> groups;
  for ( uint32_t n = 2u; n <= 4u; ++n )
  {
    groups.emplace( n, all_np_transforms( n ) );
  }
  uint64_t violations = 0u;
  for ( int i = 0; i < suite_cases; ++i )
  {
    const auto n = 2u + static_cast<uint32_t>( rng() % 3u );
    const auto bits = uint64_t( 1 ) << n;
    const auto f = truth_table::from_uint( n, rng() & ( ( uint64_t( 1 ) << bits ) - 1u ) );
    const auto& group = groups.at( n );
    const auto& g = group[rng() % group.size()];
    if ( is_root( apply_transform( f, g ) ) != is_root( f ) )
    {
      ++violations;
    }
  }
  return violations;
}

bool check_property_suites( std::string& detail )
{
  const auto closure = suite_complement_closure();
  const auto monotone = suite_fault_monotonicity();
  const auto sop = suite_sop_round_trip();
  const auto orbit = suite_root_orbit_invariance();
  std::ostringstream out;
  out << "violations: complement-closure " << closure << ", fault-monotonicity " << monotone
      << ", sop-round-trip " << sop << ", orbit-invariance " << orbit << " (1000 cases each)";
  detail = out.str();
  return closure == 0u && monotone == 0u && sop == 0u && orbit == 0u;
}

} // namespace

int main()
{
  std::map<uint32_t, root_census> censuses;
  for ( uint32_t n = 1u; n <= 6u; ++n )
  {
    censuses.emplace( n, census( n ) );
  }

  report( 1, "census table exact for n=2..6", check_census( censuses ) );
  report( 2, "minimum root cardinalities 1,2,2,4,8,12 for n=1..6",
          check_min_cardinalities( censuses ) );
  report( 3, "missing cardinalities exact for n=4,5,6", check_missing_cardinalities( censuses ) );
  report( 4, "enumerator equals brute-force root filter for n<=4", check_oracle_equivalence() );
  report( 5, "lift fixtures and doubled-cardinality closure for all roots n<=4", check_lift() );

  std::string detail;
  {
    const auto pass = check_audits( detail );
    report( 6, "no faulted root circuit reaches another root (n=3,4)", pass, detail );
  }
  {
    const auto pass = check_worked_scenario( detail );
    report( 7, "worked fault scenario and full arity-4 synthesis", pass, detail );
  }
  {
    const auto pass = check_universal_pair( detail );
    report( 8, "two arity-3 modules cover all 256 functions", pass, detail );
  }
  {
    const auto pass = check_universal_triple( detail );
    report( 9, "an arity-4 root triple covers all 65536 functions", pass, detail );
  }
  {
    const auto pass = check_property_suites( detail );
    report( 10, "randomized property suites", pass, detail );
  }

  if ( failures != 0 )
  {
    std::printf( "%d criterion(s) failed\n", failures );
    return 1;
  }
  std::printf( "all criteria passed\n" );
  return 0;
}
