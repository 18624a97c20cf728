/*!
  \file io.hpp
  \brief Text formats for truth tables

  Two interchangeable encodings are supported:

  - hex form, `n=<arity>:<hex digits>`, where the least significant hex digit
    holds minterms 0..3 and the digit count is max(1, 2^n / 4);
  - minterm list form, comma-separated bit strings written x_n .. x_1, one
    per true minterm, in ascending index order.

  `parse_table` accepts either form; printing is canonical (lowercase hex,
  fixed digit count, ascending minterms).  The constant-0 function has no
  minterm list form and is rejected by `to_minterm_string`.
*/

#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "truth_table.hpp"

namespace rootfn
{

namespace detail
{

inline std::string trim( const std::string& s )
{
  size_t b = 0u, e = s.size();
  while ( b < e && std::isspace( static_cast<unsigned char>( s[b] ) ) )
  {
    ++b;
  }
  while ( e > b && std::isspace( static_cast<unsigned char>( s[e - 1u] ) ) )
  {
    --e;
  }
  return s.substr( b, e - b );
}

inline uint32_t hex_digit_count( uint32_t num_vars )
{
  return num_vars < 3u ? 1u : ( 1u << ( num_vars - 2u ) );
}

} // namespace detail

/*! \brief Canonical hex form, e.g. `n=3:96` for the arity-3 parity-like table 0x96. */
inline std::string to_hex_string( const truth_table& f )
{
  static constexpr char digits[] = "0123456789abcdef";
  const auto count = detail::hex_digit_count( f.num_vars() );
  std::string hex( count, '0' );
  for ( uint32_t d = 0u; d < count; ++d )
  {
    const auto nibble = ( f.word( d >> 4u ) >> ( ( d & 15u ) << 2u ) ) & 0xfu;
    hex[count - 1u - d] = digits[nibble];
  }
  return "n=" + std::to_string( f.num_vars() ) + ":" + hex;
}

/*! \brief Parses the hex form.  The digit count must match the arity exactly. */
inline truth_table parse_hex_string( const std::string& text )
{
  const auto s = detail::trim( text );
  if ( s.rfind( "n=", 0u ) != 0u )
  {
    throw std::invalid_argument( "parse_hex_string: expected prefix 'n='" );
  }
  const auto colon = s.find( ':' );
  if ( colon == std::string::npos )
  {
    throw std::invalid_argument( "parse_hex_string: missing ':' separator" );
  }
  uint32_t num_vars = 0u;
  try
  {
    size_t used = 0u;
    const auto parsed = std::stoul( s.substr( 2u, colon - 2u ), &used );
    if ( used != colon - 2u || parsed == 0u )
    {
      throw std::invalid_argument( "" );
    }
    num_vars = static_cast<uint32_t>( parsed );
  }
  catch ( const std::exception& )
  {
    throw std::invalid_argument( "parse_hex_string: malformed arity in '" + s + "'" );
  }

  truth_table f( num_vars );
  const auto hex = s.substr( colon + 1u );
  if ( hex.size() != detail::hex_digit_count( num_vars ) )
  {
    throw std::invalid_argument( "parse_hex_string: expected " +
                                 std::to_string( detail::hex_digit_count( num_vars ) ) +
                                 " hex digits for arity " + std::to_string( num_vars ) );
  }
  for ( size_t pos = 0u; pos < hex.size(); ++pos )
  {
    const auto c = hex[hex.size() - 1u - pos];
    uint64_t nibble = 0u;
    if ( c >= '0' && c <= '9' )
    {
      nibble = static_cast<uint64_t>( c - '0' );
    }
    else if ( c >= 'a' && c <= 'f' )
    {
      nibble = static_cast<uint64_t>( c - 'a' ) + 10u;
    }
    else if ( c >= 'A' && c <= 'F' )
    {
      nibble = static_cast<uint64_t>( c - 'A' ) + 10u;
    }
    else
    {
      throw std::invalid_argument( "parse_hex_string: invalid hex digit '" + std::string( 1u, c ) + "'" );
    }
    if ( num_vars == 1u && nibble > 3u )
    {
      throw std::invalid_argument( "parse_hex_string: digit sets minterms beyond arity 1" );
    }
    const auto wi = pos >> 4u;
    f.set_word( wi, f.word( wi ) | ( nibble << ( ( pos & 15u ) << 2u ) ) );
  }
  return f;
}

/*! \brief Minterm list form; throws for the constant-0 function. */
inline std::string to_minterm_string( const truth_table& f )
{
  if ( f.is_const0() )
  {
    throw std::invalid_argument( "to_minterm_string: constant 0 has no minterm list form" );
  }
  std::string out;
  f.for_each_one( [&]( uint64_t m ) {
    if ( !out.empty() )
    {
      out += ',';
    }
    std::string bits( f.num_vars(), '0' );
    for ( uint32_t i = 0u; i < f.num_vars(); ++i )
    {
      if ( ( m >> i ) & 1u )
      {
        bits[f.num_vars() - 1u - i] = '1';
      }
    }
    out += bits;
  } );
  return out;
}

/*! \brief Parses the minterm list form.  All entries must share one length. */
inline truth_table parse_minterm_string( const std::string& text )
{
  std::vector<std::string> tokens;
  std::string current;
  for ( auto c : text + "," )
  {
    if ( c == ',' )
    {
      tokens.push_back( detail::trim( current ) );
      current.clear();
    }
    else
    {
      current += c;
    }
  }
  if ( tokens.empty() || tokens.front().empty() )
  {
    throw std::invalid_argument( "parse_minterm_string: empty minterm list" );
  }

  const auto num_vars = static_cast<uint32_t>( tokens.front().size() );
  if ( num_vars > max_arity )
  {
    throw resource_error( "parse_minterm_string: arity exceeds the supported maximum" );
  }
  truth_table f( num_vars );
  for ( const auto& token : tokens )
  {
    if ( token.size() != num_vars )
    {
      throw std::invalid_argument( "parse_minterm_string: minterm '" + token + "' has inconsistent arity" );
    }
    uint64_t index = 0u;
    for ( uint32_t i = 0u; i < num_vars; ++i )
    {
      const auto c = token[num_vars - 1u - i];
      if ( c == '1' )
      {
        index |= uint64_t( 1 ) << i;
      }
      else if ( c != '0' )
      {
        throw std::invalid_argument( "parse_minterm_string: invalid character '" + std::string( 1u, c ) + "' in minterm" );
      }
    }
    f.set_bit( index );
  }
  return f;
}

/*! \brief Parses either text form, keyed on the `n=` prefix. */
inline truth_table parse_table( const std::string& text )
{
  const auto s = detail::trim( text );
  if ( s.rfind( "n=", 0u ) == 0u )
  {
    return parse_hex_string( s );
  }
  return parse_minterm_string( s );
}

} // namespace rootfn
