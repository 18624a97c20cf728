/*!
  \file rootfn.cpp
  \brief Command-line toolkit for root functions

  One subcommand per library entry point.  Every report embeds the tool
  version and the resolved configuration: JSON reports carry `tool`,
  `version` and `config` fields, text and CSV reports start with a single
  `#` comment line.  Outputs are deterministic for a fixed configuration.

  Exit codes: 0 success, 1 domain error or failed verification, 2 resource
  guard refusal, 64 usage error.
*/

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <rootfn/rootfn.hpp>

using json = nlohmann::ordered_json;

namespace
{

struct run_config
{
  std::string command;
  std::string format = "text"; /* text | json | csv */
  unsigned jobs = 1u;
  uint64_t seed = 1u;
  std::string output;

  /* per-command arguments, in declaration order */
  std::vector<std::pair<std::string, std::string>> args;
};

std::string config_comment( const run_config& cfg )
{
  std::string line = "# rootfn ";
  line += rootfn::version;
  line += " " + cfg.command;
  for ( const auto& [key, value] : cfg.args )
  {
    line += " " + key + "=" + value;
  }
  line += " format=" + cfg.format;
  line += " jobs=" + std::to_string( cfg.jobs );
  line += " seed=" + std::to_string( cfg.seed );
  return line;
}

json config_json( const run_config& cfg )
{
  json config;
  config["command"] = cfg.command;
  for ( const auto& [key, value] : cfg.args )
  {
    config[key] = value;
  }
  config["format"] = cfg.format;
  config["jobs"] = cfg.jobs;
  config["seed"] = cfg.seed;
  return config;
}

json json_report( const run_config& cfg, json data )
{
  json report;
  report["tool"] = "rootfn";
  report["version"] = rootfn::version;
  report["config"] = config_json( cfg );
  report["data"] = std::move( data );
  return report;
}

void emit( const run_config& cfg, const std::string& body )
{
  if ( cfg.output.empty() )
  {
    std::cout << body;
    return;
  }
  std::ofstream out( cfg.output );
  if ( !out )
  {
    throw std::invalid_argument( "cannot open output file '" + cfg.output + "'" );
  }
  out << body;
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw std::invalid_argument( "cannot open file '" + path + "'" );
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string bool_word( bool b )
{
  return b ? "true" : "false";
}

/* ------------------------------------------------------------------ */

int cmd_check( const run_config& cfg, const std::string& table )
{
  const auto f = rootfn::parse_table( table );
  const auto support = rootfn::support( f );
  const auto non_vacuous = support.size() == f.num_vars();
  const auto isolated = rootfn::is_isolated( f );
  const auto maximal = rootfn::is_maximal( f );
  const auto root = non_vacuous && isolated && maximal;

  if ( cfg.format == "json" )
  {
    json data;
    data["table"] = rootfn::to_hex_string( f );
    data["arity"] = f.num_vars();
    data["ones"] = f.count_ones();
    data["support"] = support;
    data["non_vacuous"] = non_vacuous;
    data["isolated"] = isolated;
    data["maximal"] = maximal;
    data["root"] = root;
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    out << "table: " << rootfn::to_hex_string( f ) << "\n";
    out << "arity: " << f.num_vars() << "\n";
    out << "ones: " << f.count_ones() << "\n";
    out << "non_vacuous: " << bool_word( non_vacuous ) << "\n";
    out << "isolated: " << bool_word( isolated ) << "\n";
    out << "maximal: " << bool_word( maximal ) << "\n";
    out << "root: " << bool_word( root ) << "\n";
    emit( cfg, out.str() );
  }
  return 0;
}

int cmd_bounds( const run_config& cfg, uint32_t n )
{
  const auto bounds = rootfn::root_size_bounds( n );
  if ( cfg.format == "json" )
  {
    json data;
    data["n"] = n;
    data["lower"] = bounds.lower;
    data["upper"] = bounds.upper;
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    out << "lower: " << bounds.lower << "\n";
    out << "upper: " << bounds.upper << "\n";
    emit( cfg, out.str() );
  }
  return 0;
}

int cmd_census( const run_config& cfg, uint32_t n, const std::string& emit_path )
{
  rootfn::root_census result{ n, {}, 0u };
  if ( emit_path.empty() )
  {
    result = rootfn::census( n, { cfg.jobs } );
  }
  else
  {
    std::ofstream roots_out( emit_path );
    if ( !roots_out )
    {
      throw std::invalid_argument( "cannot open emit file '" + emit_path + "'" );
    }
    rootfn::enumerate_roots( n, [&]( const rootfn::truth_table& r ) {
      roots_out << rootfn::to_hex_string( r ) << "\n";
      ++result.by_cardinality[r.count_ones()];
      ++result.total;
    }, { cfg.jobs } );
  }

  if ( cfg.format == "json" )
  {
    json by_cardinality;
    for ( const auto& [k, count] : result.by_cardinality )
    {
      by_cardinality[std::to_string( k )] = count;
    }
    json data;
    data["n"] = n;
    data["by_cardinality"] = by_cardinality;
    data["total"] = result.total;
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else if ( cfg.format == "csv" )
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    out << "n,k,count\n";
    for ( const auto& [k, count] : result.by_cardinality )
    {
      out << n << "," << k << "," << count << "\n";
    }
    out << n << ",total," << result.total << "\n";
    emit( cfg, out.str() );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    for ( const auto& [k, count] : result.by_cardinality )
    {
      out << "k=" << k << " count=" << count << "\n";
    }
    out << "total " << result.total << "\n";
    emit( cfg, out.str() );
  }
  return 0;
}

int cmd_catalog( const run_config& cfg, uint32_t n )
{
  const auto entries = rootfn::catalog( n );
  if ( cfg.format == "json" )
  {
    json data = json::array();
    for ( const auto& e : entries )
    {
      json entry;
      entry["label"] = e.label;
      entry["table"] = rootfn::to_hex_string( e.function );
      entry["minterms"] = rootfn::to_minterm_string( e.function );
      entry["ones"] = e.function.count_ones();
      data.push_back( entry );
    }
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    for ( const auto& e : entries )
    {
      out << e.label << ": " << rootfn::to_hex_string( e.function )
          << " (" << rootfn::to_minterm_string( e.function ) << ")\n";
    }
    emit( cfg, out.str() );
  }
  return 0;
}

int cmd_lift( const run_config& cfg, const std::string& table, uint32_t var )
{
  const auto root = rootfn::parse_table( table );
  const auto lifted = rootfn::lift( root, var );
  if ( cfg.format == "json" )
  {
    json data;
    data["input"] = rootfn::to_hex_string( root );
    data["var"] = var;
    data["lifted"] = rootfn::to_hex_string( lifted );
    data["minterms"] = rootfn::to_minterm_string( lifted );
    data["ones"] = lifted.count_ones();
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    out << rootfn::to_hex_string( lifted ) << "\n";
    out << rootfn::to_minterm_string( lifted ) << "\n";
    emit( cfg, out.str() );
  }
  return 0;
}

int cmd_canon( const run_config& cfg, const std::string& table )
{
  const auto f = rootfn::parse_table( table );
  const auto canonical = rootfn::np_canonical( f );
  if ( cfg.format == "json" )
  {
    json data;
    data["input"] = rootfn::to_hex_string( f );
    data["canonical"] = rootfn::to_hex_string( canonical );
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    out << rootfn::to_hex_string( canonical ) << "\n";
    emit( cfg, out.str() );
  }
  return 0;
}

int cmd_orbit( const run_config& cfg, const std::string& table )
{
  const auto f = rootfn::parse_table( table );
  const auto orbit = rootfn::np_orbit( f );
  if ( cfg.format == "json" )
  {
    json members = json::array();
    for ( const auto& g : orbit )
    {
      members.push_back( rootfn::to_hex_string( g ) );
    }
    json data;
    data["input"] = rootfn::to_hex_string( f );
    data["size"] = orbit.size();
    data["members"] = members;
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    out << "size " << orbit.size() << "\n";
    for ( const auto& g : orbit )
    {
      out << rootfn::to_hex_string( g ) << "\n";
    }
    emit( cfg, out.str() );
  }
  return 0;
}

int cmd_sop( const run_config& cfg, const std::string& table )
{
  const auto f = rootfn::parse_table( table );
  const auto cover = rootfn::irredundant_cover( f );
  if ( cfg.format == "json" )
  {
    json terms = json::array();
    for ( const auto& term : cover.terms )
    {
      terms.push_back( rootfn::to_string( term ) );
    }
    json data;
    data["input"] = rootfn::to_hex_string( f );
    data["terms"] = terms;
    data["term_count"] = cover.terms.size();
    data["irredundant"] = rootfn::verify_irredundant( f, cover );
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    for ( const auto& term : cover.terms )
    {
      out << rootfn::to_string( term ) << "\n";
    }
    emit( cfg, out.str() );
  }
  return 0;
}

int cmd_simulate( const run_config& cfg, const std::string& circuit_path, const std::string& faults_path )
{
  const auto circuit = rootfn::parse_circuit( read_file( circuit_path ) );
  const auto faults = faults_path.empty() ? rootfn::fault_assignment{}
                                          : rootfn::parse_fault_lines( read_file( faults_path ) );
  const auto response = rootfn::simulate( circuit, faults );
  const auto fault_free = rootfn::fault_free_function( circuit );

  if ( cfg.format == "json" )
  {
    json data;
    data["circuit"] = circuit_path;
    data["gates"] = circuit.gates.size();
    data["faults"] = faults.size();
    data["fault_free"] = rootfn::to_hex_string( fault_free );
    data["response"] = rootfn::to_hex_string( response );
    data["detected"] = response != fault_free;
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    out << "fault_free: " << rootfn::to_hex_string( fault_free ) << "\n";
    out << "response: " << rootfn::to_hex_string( response ) << "\n";
    out << "detected: " << bool_word( response != fault_free ) << "\n";
    emit( cfg, out.str() );
  }
  return 0;
}

json minterm_list_json( uint32_t num_vars, const std::vector<uint64_t>& minterms )
{
  json list = json::array();
  for ( const auto m : minterms )
  {
    list.push_back( rootfn::to_string( rootfn::minterm( num_vars, m ) ) );
  }
  return list;
}

int cmd_synth( const run_config& cfg, const std::string& table )
{
  const auto target = rootfn::parse_table( table );
  const auto scenario = rootfn::synthesize_fault_scenario( target );

  if ( cfg.format == "json" )
  {
    json faults = json::array();
    for ( const auto& [site, value] : scenario.faults )
    {
      faults.push_back( rootfn::format_fault( site, value ) );
    }
    json gates = json::array();
    for ( const auto& gate : scenario.circuit.gates )
    {
      gates.push_back( rootfn::to_string( gate ) );
    }
    json data;
    data["target"] = rootfn::to_hex_string( target );
    data["root"] = rootfn::to_hex_string( scenario.root );
    data["gates"] = gates;
    data["faults"] = faults;
    data["response"] = rootfn::to_hex_string( scenario.response );
    data["grown"] = minterm_list_json( target.num_vars(), scenario.grown_minterms );
    data["killed"] = minterm_list_json( target.num_vars(), scenario.killed_minterms );
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    out << "target: " << rootfn::to_hex_string( target ) << "\n";
    out << "root: " << rootfn::to_hex_string( scenario.root );
    out << " (" << rootfn::to_minterm_string( scenario.root ) << ")\n";
    out << "circuit:\n";
    for ( const auto& gate : scenario.circuit.gates )
    {
      out << "  " << rootfn::to_string( gate ) << "\n";
    }
    out << "faults:\n";
    for ( const auto& [site, value] : scenario.faults )
    {
      out << "  " << rootfn::format_fault( site, value ) << "\n";
    }
    out << "response: " << rootfn::to_hex_string( scenario.response ) << "\n";
    emit( cfg, out.str() );
  }
  return 0;
}

int cmd_audit( const run_config& cfg, uint32_t n )
{
  const auto report = rootfn::fault_immunity_audit( n, { cfg.jobs } );
  if ( cfg.format == "json" )
  {
    json violations = json::array();
    for ( const auto& [root, response] : report.violations )
    {
      json v;
      v["root"] = rootfn::to_hex_string( root );
      v["response"] = rootfn::to_hex_string( response );
      violations.push_back( v );
    }
    json data;
    data["n"] = report.num_vars;
    data["roots"] = report.roots_checked;
    data["responses"] = report.responses_checked;
    data["violations"] = violations;
    data["pass"] = report.pass;
    emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  }
  else
  {
    std::ostringstream out;
    out << config_comment( cfg ) << "\n";
    out << "roots: " << report.roots_checked << "\n";
    out << "responses: " << report.responses_checked << "\n";
    out << "violations: " << report.violations.size() << "\n";
    out << ( report.pass ? "PASS" : "FAIL" ) << "\n";
    emit( cfg, out.str() );
  }
  return report.pass ? 0 : 1;
}

int cmd_universal( const run_config& cfg, uint32_t n )
{
  if ( n == 3u )
  {
    const auto report = rootfn::universal_pair_experiment();
    if ( cfg.format == "json" )
    {
      json data;
      data["n"] = report.num_vars;
      data["root_a"] = rootfn::to_hex_string( report.root_a );
      data["root_b"] = rootfn::to_hex_string( report.root_b );
      data["reachable_a"] = report.reachable_a;
      data["reachable_b"] = report.reachable_b;
      data["covered_nonroots_a"] = report.covered_nonroots_a;
      data["covered_nonroots_b"] = report.covered_nonroots_b;
      data["covered_total"] = report.covered_total;
      data["covers_all"] = report.covers_all;
      emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
    }
    else
    {
      std::ostringstream out;
      out << config_comment( cfg ) << "\n";
      out << "root_a: " << rootfn::to_hex_string( report.root_a )
          << " reachable=" << report.reachable_a
          << " covered_nonroots=" << report.covered_nonroots_a << "\n";
      out << "root_b: " << rootfn::to_hex_string( report.root_b )
          << " reachable=" << report.reachable_b
          << " covered_nonroots=" << report.covered_nonroots_b << "\n";
      out << "covered_total: " << report.covered_total << "\n";
      out << "covers_all: " << bool_word( report.covers_all ) << "\n";
      emit( cfg, out.str() );
    }
    return report.covers_all ? 0 : 1;
  }
  if ( n == 4u )
  {
    const auto report = rootfn::universal_triple_search();
    if ( cfg.format == "json" )
    {
      json classes = json::array();
      for ( size_t i = 0u; i < report.class_representatives.size(); ++i )
      {
        json entry;
        entry["representative"] = rootfn::to_hex_string( report.class_representatives[i] );
        entry["roots"] = report.class_sizes[i];
        entry["closure"] = report.closure_sizes[i];
        classes.push_back( entry );
      }
      json data;
      data["n"] = report.num_vars;
      data["root_classes"] = report.root_class_count;
      data["classes"] = classes;
      data["covered_total"] = report.covered_total;
      data["covers_all"] = report.covers_all;
      emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
    }
    else
    {
      std::ostringstream out;
      out << config_comment( cfg ) << "\n";
      out << "root_classes: " << report.root_class_count << "\n";
      for ( size_t i = 0u; i < report.class_representatives.size(); ++i )
      {
        out << "class " << rootfn::to_hex_string( report.class_representatives[i] )
            << " roots=" << report.class_sizes[i]
            << " closure=" << report.closure_sizes[i] << "\n";
      }
      out << "covered_total: " << report.covered_total << "\n";
      out << "covers_all: " << bool_word( report.covers_all ) << "\n";
      emit( cfg, out.str() );
    }
    return report.covers_all ? 0 : 1;
  }
  throw std::invalid_argument( "universal: experiments are defined for n=3 and n=4" );
}

/* ------------------------------------------------------------------ */

struct claim_set
{
  json claims = json::array();
  bool all_pass = true;

  void add( const std::string& name, json expected, json actual )
  {
    const bool pass = expected == actual;
    json claim;
    claim["name"] = name;
    claim["expected"] = std::move( expected );
    claim["actual"] = std::move( actual );
    claim["pass"] = pass;
    claims.push_back( std::move( claim ) );
    all_pass = all_pass && pass;
  }
};

int cmd_reproduce( const run_config& cfg )
{
  using namespace rootfn;
  claim_set claims;

  /* census table, cardinality splits, minimum sizes, gaps */
  const std::vector<uint64_t> expected_totals{ 2u, 6u, 42u, 1670u, 1281402u };
  std::vector<root_census> censuses;
  for ( uint32_t n = 2u; n <= 6u; ++n )
  {
    censuses.push_back( census( n, { cfg.jobs } ) );
  }
  {
    json actual = json::array();
    for ( const auto& c : censuses )
    {
      actual.push_back( c.total );
    }
    claims.add( "census_totals_n2_to_n6", expected_totals, actual );
  }
  {
    auto split = []( const root_census& c ) {
      json obj;
      for ( const auto& [k, count] : c.by_cardinality )
      {
        obj[std::to_string( k )] = count;
      }
      return obj;
    };
    claims.add( "census_n4_split", json{ { "4", 24 }, { "5", 16 }, { "8", 2 } }, split( censuses[2] ) );
    claims.add( "census_n5_split",
                json{ { "8", 1140 }, { "9", 320 }, { "10", 176 }, { "12", 32 }, { "16", 2 } },
                split( censuses[3] ) );
    claims.add( "census_n6_split",
                json{ { "12", 320 }, { "14", 9600 }, { "15", 25920 }, { "16", 736440 },
                      { "17", 337920 }, { "18", 116320 }, { "19", 40320 }, { "20", 8320 },
                      { "21", 3840 }, { "22", 1856 }, { "24", 480 }, { "27", 64 }, { "32", 2 } },
                split( censuses[4] ) );
  }
  {
    json actual = json::array();
    actual.push_back( census( 1u ).by_cardinality.begin()->first );
    for ( const auto& c : censuses )
    {
      actual.push_back( c.by_cardinality.begin()->first );
    }
    claims.add( "min_cardinalities_n1_to_n6", json::array( { 1, 2, 2, 4, 8, 12 } ), actual );
  }
  {
    claims.add( "missing_cardinalities_n4", json::array( { 6, 7 } ), missing_cardinalities( censuses[2] ) );
    claims.add( "missing_cardinalities_n5", json::array( { 11, 13, 14, 15 } ),
                missing_cardinalities( censuses[3] ) );
    claims.add( "missing_cardinalities_n6", json::array( { 13, 23, 25, 26, 28, 29, 30, 31 } ),
                missing_cardinalities( censuses[4] ) );
  }
  {
    /* the parity pair attains the upper bound, and nothing else does */
    json expected = json::array(), actual = json::array();
    for ( uint32_t n = 2u; n <= 6u; ++n )
    {
      const auto& c = censuses[n - 2u];
      expected.push_back( json::array( { root_size_bounds( n ).upper, 2u } ) );
      actual.push_back( json::array(
          { c.by_cardinality.rbegin()->first, c.by_cardinality.rbegin()->second } ) );
    }
    claims.add( "parity_bound_attained", expected, actual );
  }

  /* constructions */
  {
    const auto lifted = lift( catalog( 5u ).front().function, 1u );
    claims.add( "lift_of_min_root_5_is_sixteen_minterm_6",
                to_hex_string( catalog( 6u ).back().function ), to_hex_string( lifted ) );
  }
  {
    bool all_roots = true;
    for ( uint32_t n = 2u; n <= 7u; ++n )
    {
      for ( const auto& e : catalog( n ) )
      {
        all_roots = all_roots && is_root( e.function );
      }
    }
    claims.add( "catalog_entries_are_roots", true, all_roots );
  }

  /* exhaustive oracle at small arity: predicates vs enumerator */
  {
    bool match = true;
    for ( uint32_t n = 1u; n <= 4u && match; ++n )
    {
      std::set<uint64_t> from_enum;
      enumerate_roots( n, [&]( const truth_table& r ) { from_enum.insert( r.to_uint() ); } );
      std::set<uint64_t> from_brute;
      for ( uint64_t m = 0u; m < ( uint64_t( 1 ) << ( uint64_t( 1 ) << n ) ); ++m )
      {
        if ( is_root( truth_table::from_uint( n, m ) ) )
        {
          from_brute.insert( m );
        }
      }
      match = from_enum == from_brute;
    }
    claims.add( "enumerator_matches_predicates_n1_to_n4", true, match );
  }

  /* the worked arity-4 fault scenario */
  {
    const auto root = catalog( 4u ).back().function;
    const auto circuit = build_circuit( root_cover( root ) );
    const auto faults = parse_fault_lines( "branch:0,1=0\nbranch:0,2=0\nbranch:2,4=1\n"
                                           "branch:2,3=0\nbranch:3,2=0\norin:1=0\norin:4=0\n" );
    const auto response = simulate( circuit, faults );
    claims.add( "worked_scenario_response", "n=4:a88f", to_hex_string( response ) );

    const auto scenario = synthesize_fault_scenario( response );
    claims.add( "worked_target_synthesis",
                json{ { "root", "0000,0011,0110,1010,1101" },
                      { "valid", true } },
                json{ { "root", to_minterm_string( scenario.root ) },
                      { "valid", is_root( scenario.root ) &&
                                     simulate( scenario.circuit, scenario.faults ) == response } } );
  }

  /* fault immunity audits */
  for ( uint32_t n = 3u; n <= 4u; ++n )
  {
    const auto report = fault_immunity_audit( n, { cfg.jobs } );
    claims.add( "fault_immunity_audit_n" + std::to_string( n ),
                json{ { "violations", 0 }, { "pass", true } },
                json{ { "violations", report.violations.size() }, { "pass", report.pass } } );
  }

  /* universal logic module experiments */
  {
    const auto pair = universal_pair_experiment();
    claims.add( "universal_pair_n3",
                json{ { "reachable_a", 44 }, { "reachable_b", 175 },
                      { "covered_nonroots_a", 118 }, { "covered_nonroots_b", 250 },
                      { "covered_total", 256 }, { "covers_all", true } },
                json{ { "reachable_a", pair.reachable_a }, { "reachable_b", pair.reachable_b },
                      { "covered_nonroots_a", pair.covered_nonroots_a },
                      { "covered_nonroots_b", pair.covered_nonroots_b },
                      { "covered_total", pair.covered_total }, { "covers_all", pair.covers_all } } );
  }
  {
    const auto triple = universal_triple_search();
    json reps = json::array();
    for ( const auto& rep : triple.class_representatives )
    {
      reps.push_back( to_hex_string( rep ) );
    }
    claims.add( "universal_triple_n4",
                json{ { "root_classes", 3 },
                      { "representatives", json::array( { "n=4:0690", "n=4:1681", "n=4:6996" } ) },
                      { "closure_sizes", json::array( { 32030, 48058, 62680 } ) },
                      { "covered_total", 65536 }, { "covers_all", true } },
                json{ { "root_classes", triple.root_class_count },
                      { "representatives", reps },
                      { "closure_sizes", triple.closure_sizes },
                      { "covered_total", triple.covered_total },
                      { "covers_all", triple.covers_all } } );
  }

  json data;
  data["claims"] = std::move( claims.claims );
  data["all_pass"] = claims.all_pass;
  emit( cfg, json_report( cfg, data ).dump( 2 ) + "\n" );
  return claims.all_pass ? 0 : 1;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "rootfn: root functions, their enumeration, and stuck-at fault behaviour" };
  app.require_subcommand( 1 );
  app.fallthrough(); /* global options may follow the subcommand */

  run_config cfg;
  app.add_option( "--format", cfg.format, "report format: text, json or csv" )
      ->check( CLI::IsMember( { "text", "json", "csv" } ) )
      ->capture_default_str();
  app.add_option( "--jobs", cfg.jobs, "worker threads for enumeration (0 = all cores)" )
      ->capture_default_str();
  app.add_option( "--seed", cfg.seed, "seed echoed into reports" )->capture_default_str();
  app.add_option( "--output", cfg.output, "write the report to a file instead of stdout" );

  std::string table, circuit_path, faults_path, emit_path;
  uint32_t n = 0u, var = 0u;

  auto* check = app.add_subcommand( "check", "evaluate the root predicates on one function" );
  check->add_option( "table", table, "truth table (hex or minterm list form)" )->required();

  auto* bounds = app.add_subcommand( "bounds", "cardinality bounds for roots of one arity" );
  bounds->add_option( "--n", n, "arity" )->required();

  auto* census_cmd = app.add_subcommand( "census", "count all roots of one arity by cardinality" );
  census_cmd->add_option( "--n", n, "arity" )->required();
  census_cmd->add_option( "--emit", emit_path, "also write every root, one hex table per line" );

  auto* catalog_cmd = app.add_subcommand( "catalog", "named fixture roots of one arity" );
  catalog_cmd->add_option( "--n", n, "arity (2..7)" )->required();

  auto* lift_cmd = app.add_subcommand( "lift", "extend a root to arity n+1" );
  lift_cmd->add_option( "table", table, "root function" )->required();
  lift_cmd->add_option( "--var", var, "variable complemented in the upper half" )->required();

  auto* canon = app.add_subcommand( "canon", "NP-canonical form of one function" );
  canon->add_option( "table", table, "truth table" )->required();

  auto* orbit = app.add_subcommand( "orbit", "full NP orbit of one function" );
  orbit->add_option( "table", table, "truth table" )->required();

  auto* sop = app.add_subcommand( "sop", "irredundant sum-of-products cover" );
  sop->add_option( "table", table, "truth table" )->required();

  auto* simulate_cmd = app.add_subcommand( "simulate", "response of a circuit under stuck-at faults" );
  simulate_cmd->add_option( "--circuit", circuit_path, "circuit file, one cube per line" )->required();
  simulate_cmd->add_option( "--faults", faults_path, "fault file, one fault per line" );

  auto* synth = app.add_subcommand( "synth", "realise a target as a faulted root circuit" );
  synth->add_option( "table", table, "target function" )->required();

  auto* audit = app.add_subcommand( "audit", "verify no root circuit faults into another root" );
  audit->add_option( "--n", n, "arity (1..4)" )->required();

  auto* universal = app.add_subcommand( "universal", "universal logic module experiments" );
  universal->add_option( "--n", n, "arity (3 or 4)" )->required();

  app.add_subcommand( "reproduce-paper", "run the full verification suite, JSON verdict per claim" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::CallForAllHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return 64;
  }

  try
  {
    const auto* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    auto arg = [&]( const std::string& key, const std::string& value ) {
      cfg.args.emplace_back( key, value );
    };

    if ( sub == check )
    {
      arg( "table", table );
      return cmd_check( cfg, table );
    }
    if ( sub == bounds )
    {
      arg( "n", std::to_string( n ) );
      return cmd_bounds( cfg, n );
    }
    if ( sub == census_cmd )
    {
      arg( "n", std::to_string( n ) );
      if ( !emit_path.empty() )
      {
        arg( "emit", emit_path );
      }
      return cmd_census( cfg, n, emit_path );
    }
    if ( sub == catalog_cmd )
    {
      arg( "n", std::to_string( n ) );
      return cmd_catalog( cfg, n );
    }
    if ( sub == lift_cmd )
    {
      arg( "table", table );
      arg( "var", std::to_string( var ) );
      return cmd_lift( cfg, table, var );
    }
    if ( sub == canon )
    {
      arg( "table", table );
      return cmd_canon( cfg, table );
    }
    if ( sub == orbit )
    {
      arg( "table", table );
      return cmd_orbit( cfg, table );
    }
    if ( sub == sop )
    {
      arg( "table", table );
      return cmd_sop( cfg, table );
    }
    if ( sub == simulate_cmd )
    {
      arg( "circuit", circuit_path );
      if ( !faults_path.empty() )
      {
        arg( "faults", faults_path );
      }
      return cmd_simulate( cfg, circuit_path, faults_path );
    }
    if ( sub == synth )
    {
      arg( "table", table );
      return cmd_synth( cfg, table );
    }
    if ( sub == audit )
    {
      arg( "n", std::to_string( n ) );
      return cmd_audit( cfg, n );
    }
    if ( sub == universal )
    {
      arg( "n", std::to_string( n ) );
      return cmd_universal( cfg, n );
    }
    /* reproduce-paper */
    return cmd_reproduce( cfg );
  }
  catch ( const rootfn::resource_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
