#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <rootfn/cube.hpp>
#include <rootfn/io.hpp>

using namespace rootfn;

TEST_CASE( "cube construction is validated", "[cube]" )
{
  CHECK_NOTHROW( cube( 3u, 0b101u, 0b100u ) );
  CHECK_THROWS_AS( cube( 0u, 0u, 0u ), std::invalid_argument );
  CHECK_THROWS_AS( cube( 3u, 0b101u, 0b010u ), std::invalid_argument );
  CHECK_THROWS_AS( cube( 3u, 0b1000u, 0u ), std::invalid_argument );
  CHECK_THROWS_AS( cube::minterm_cube( 3u, 8u ), std::invalid_argument );
}

TEST_CASE( "cube text form runs x_n down to x_1", "[cube]" )
{
  const auto c = parse_cube( "1-0" );
  CHECK( c.num_vars == 3u );
  CHECK( c.care == 0b101u );
  CHECK( c.bits == 0b100u );
  CHECK( to_string( c ) == "1-0" );
  CHECK( c.num_literals() == 2u );
  CHECK( c.covered_count() == 2u );

  CHECK( to_string( cube::minterm_cube( 4u, 0b0111u ) ) == "0111" );
  CHECK( to_string( cube( 2u, 0u, 0u ) ) == "--" );

  CHECK_THROWS_AS( parse_cube( "" ), std::invalid_argument );
  CHECK_THROWS_AS( parse_cube( "1x0" ), std::invalid_argument );
  CHECK_THROWS_AS( parse_cube( std::string( 27u, '-' ) ), std::invalid_argument );
}

TEST_CASE( "containment checks care bits only", "[cube]" )
{
  const auto c = parse_cube( "1-0" );
  CHECK( c.contains( 0b100u ) );
  CHECK( c.contains( 0b110u ) );
  CHECK( !c.contains( 0b101u ) );
  CHECK( !c.contains( 0b000u ) );
}

TEST_CASE( "cubes sort like their text", "[cube]" )
{
  std::vector<cube> cubes{ parse_cube( "11-1" ), parse_cube( "00--" ), parse_cube( "--11" ) };
  std::sort( cubes.begin(), cubes.end() );
  CHECK( to_string( cubes[0] ) == "--11" );
  CHECK( to_string( cubes[1] ) == "00--" );
  CHECK( to_string( cubes[2] ) == "11-1" );
  CHECK( cubes[0] == parse_cube( "--11" ) );
  CHECK( !( cubes[0] < cubes[0] ) );
}

TEST_CASE( "subsumption", "[cube]" )
{
  CHECK( subsumes( parse_cube( "1--" ), parse_cube( "1-0" ) ) );
  CHECK( !subsumes( parse_cube( "1-0" ), parse_cube( "1--" ) ) );
  CHECK( subsumes( parse_cube( "---" ), parse_cube( "010" ) ) );
  CHECK( !subsumes( parse_cube( "0--" ), parse_cube( "1-0" ) ) );
  CHECK( subsumes( parse_cube( "1-0" ), parse_cube( "1-0" ) ) );
  CHECK_THROWS_AS( subsumes( parse_cube( "1-" ), parse_cube( "1-0" ) ), std::invalid_argument );
}

TEST_CASE( "covered minterms stream in ascending order", "[cube]" )
{
  std::vector<uint64_t> seen;
  for_each_cube_minterm( parse_cube( "--1" ), [&]( uint64_t m ) { seen.push_back( m ); } );
  CHECK( seen == std::vector<uint64_t>{ 1u, 3u, 5u, 7u } );

  seen.clear();
  for_each_cube_minterm( parse_cube( "101" ), [&]( uint64_t m ) { seen.push_back( m ); } );
  CHECK( seen == std::vector<uint64_t>{ 5u } );

  seen.clear();
  for_each_cube_minterm( parse_cube( "--" ), [&]( uint64_t m ) { seen.push_back( m ); } );
  CHECK( seen == std::vector<uint64_t>{ 0u, 1u, 2u, 3u } );
}

TEST_CASE( "cube_function marks exactly the covered minterms", "[cube]" )
{
  CHECK( to_hex_string( cube_function( parse_cube( "1-0" ) ) ) == "n=3:50" );
  CHECK( cube_function( parse_cube( "----" ) ).count_ones() == 16u );
}

TEST_CASE( "supercubes enumerate literal drops ascending", "[cube]" )
{
  const auto sup = supercubes( parse_cube( "10" ) );
  REQUIRE( sup.size() == 4u );
  CHECK( to_string( sup[0] ) == "10" );
  CHECK( to_string( sup[1] ) == "1-" );
  CHECK( to_string( sup[2] ) == "-0" );
  CHECK( to_string( sup[3] ) == "--" );

  CHECK( supercubes( parse_cube( "---" ) ).size() == 1u );
  CHECK( supercubes( parse_cube( "0110" ) ).size() == 16u );
}
