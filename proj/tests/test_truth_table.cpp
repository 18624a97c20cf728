#include <catch2/catch_amalgamated.hpp>

#include <rootfn/truth_table.hpp>

using namespace rootfn;

TEST_CASE( "construction and bit access", "[truth_table]" )
{
  truth_table f( 3u );
  CHECK( f.num_vars() == 3u );
  CHECK( f.num_bits() == 8u );
  CHECK( f.is_const0() );
  CHECK( f.count_ones() == 0u );

  f.set_bit( 0u );
  f.set_bit( 7u );
  CHECK( f.get_bit( 0u ) );
  CHECK( f.get_bit( 7u ) );
  CHECK( !f.get_bit( 3u ) );
  CHECK( f.count_ones() == 2u );

  f.set_bit( 7u, false );
  CHECK( !f.get_bit( 7u ) );
  CHECK( f.count_ones() == 1u );
}

TEST_CASE( "arity guards", "[truth_table]" )
{
  CHECK_THROWS_AS( truth_table( 0u ), std::invalid_argument );
  CHECK_THROWS_AS( truth_table( 27u ), resource_error );
  CHECK_NOTHROW( truth_table( 1u ) );

  truth_table f( 2u );
  CHECK_THROWS_AS( f.set_bit( 4u ), std::invalid_argument );
}

TEST_CASE( "constants and builders", "[truth_table]" )
{
  const auto zero = truth_table::constant( 4u, false );
  const auto one = truth_table::constant( 4u, true );
  CHECK( zero.is_const0() );
  CHECK( one.is_const1() );
  CHECK( one.count_ones() == 16u );

  const auto f = truth_table::from_minterms( 3u, { 1u, 2u, 4u, 7u } );
  CHECK( f.count_ones() == 4u );
  CHECK( f.to_uint() == 0x96u );
  CHECK( truth_table::from_uint( 3u, 0x96u ) == f );
}

TEST_CASE( "bitwise operators mask the unused tail", "[truth_table]" )
{
  const auto f = truth_table::from_minterms( 2u, { 0u, 3u } );
  const auto g = truth_table::from_minterms( 2u, { 1u, 2u } );
  CHECK( ( f | g ).is_const1() );
  CHECK( ( f & g ).is_const0() );
  CHECK( ( f ^ g ).is_const1() );
  CHECK( ~f == g );
  CHECK( ( ~f ).count_ones() == 2u ); /* no stray bits beyond 2^n */
}

TEST_CASE( "arity mismatch is rejected", "[truth_table]" )
{
  const truth_table f( 3u );
  const truth_table g( 4u );
  CHECK_THROWS_AS( f & g, std::invalid_argument );
  CHECK( f != g );
}

TEST_CASE( "ordering is by arity, then by table bits", "[truth_table]" )
{
  CHECK( truth_table( 2u ) < truth_table( 3u ) );
  const auto a = truth_table::from_uint( 3u, 0x69u );
  const auto b = truth_table::from_uint( 3u, 0x96u );
  CHECK( a < b );
  CHECK( !( b < a ) );
  CHECK( !( a < a ) );
}

TEST_CASE( "multi-word ordering compares high words first", "[truth_table]" )
{
  truth_table a( 7u ), b( 7u );
  a.set_bit( 127u );
  b.set_bit( 0u );
  CHECK( b < a );
}

TEST_CASE( "for_each_one walks ascending", "[truth_table]" )
{
  const auto f = truth_table::from_minterms( 7u, { 0u, 63u, 64u, 127u } );
  std::vector<uint64_t> seen;
  f.for_each_one( [&]( uint64_t m ) { seen.push_back( m ); } );
  CHECK( seen == std::vector<uint64_t>{ 0u, 63u, 64u, 127u } );
  CHECK( f.one_indices() == seen );
}

TEST_CASE( "flip_variable within one word", "[truth_table]" )
{
  const auto f = truth_table::from_minterms( 3u, { 0u, 5u } );
  CHECK( flip_variable( f, 1u ) == truth_table::from_minterms( 3u, { 1u, 4u } ) );
  CHECK( flip_variable( f, 2u ) == truth_table::from_minterms( 3u, { 2u, 7u } ) );
  CHECK( flip_variable( f, 3u ) == truth_table::from_minterms( 3u, { 4u, 1u } ) );
  CHECK( flip_variable( flip_variable( f, 2u ), 2u ) == f );
}

TEST_CASE( "flip_variable across words", "[truth_table]" )
{
  /* arity 8 = 4 words; x_7 and x_8 flips move whole words */
  truth_table f( 8u );
  f.set_bit( 0u );
  f.set_bit( 200u );
  const auto f7 = flip_variable( f, 7u );
  CHECK( f7.get_bit( 64u ) );
  CHECK( f7.get_bit( 200u ^ 64u ) );
  CHECK( f7.count_ones() == 2u );
  const auto f8 = flip_variable( f, 8u );
  CHECK( f8.get_bit( 128u ) );
  CHECK( f8.get_bit( 200u ^ 128u ) );

  /* against a per-bit reference on all variables */
  for ( uint32_t var = 1u; var <= 8u; ++var )
  {
    const auto flipped = flip_variable( f, var );
    truth_table reference( 8u );
    f.for_each_one( [&]( uint64_t m ) { reference.set_bit( m ^ ( uint64_t( 1 ) << ( var - 1u ) ) ); } );
    CHECK( flipped == reference );
  }
}

TEST_CASE( "flip_variable rejects bad indices", "[truth_table]" )
{
  const truth_table f( 3u );
  CHECK_THROWS_AS( flip_variable( f, 0u ), std::invalid_argument );
  CHECK_THROWS_AS( flip_variable( f, 4u ), std::invalid_argument );
}
