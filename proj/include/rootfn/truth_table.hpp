/*!
  \file truth_table.hpp
  \brief Dense truth table over n Boolean variables

  A function of arity n is stored as a bit vector of length 2^n.  Bit m holds
  the function value on the minterm with index m, where variable x_i
  contributes bit 2^(i-1) of the index.  Variables are numbered x_1 .. x_n
  throughout the library; x_1 is the least significant position.
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace rootfn
{

/*! \brief Largest supported arity.

  A table of arity 26 occupies 8 MiB.  Anything above that is refused with a
  resource_error rather than silently exhausting memory.
*/
inline constexpr uint32_t max_arity = 26u;

/*! \brief Truth table of a Boolean function with fixed arity. */
class truth_table
{
public:
  /*! \brief Constructs the constant-0 function of the given arity. */
  explicit truth_table( uint32_t num_vars )
      : _num_vars( num_vars )
  {
    if ( num_vars == 0u )
    {
      throw std::invalid_argument( "truth_table: arity must be at least 1" );
    }
    if ( num_vars > max_arity )
    {
      throw resource_error( "truth_table: arity " + std::to_string( num_vars ) +
                            " exceeds the supported maximum of " + std::to_string( max_arity ) );
    }
    _words.resize( word_count(), 0u );
  }

  /*! \brief Builds a table from a list of true minterm indices. */
  static truth_table from_minterms( uint32_t num_vars, const std::vector<uint64_t>& minterms )
  {
    truth_table tt( num_vars );
    for ( auto m : minterms )
    {
      tt.set_bit( m );
    }
    return tt;
  }

  /*! \brief Builds the constant-0 or constant-1 function. */
  static truth_table constant( uint32_t num_vars, bool value )
  {
    truth_table tt( num_vars );
    if ( value )
    {
      std::fill( tt._words.begin(), tt._words.end(), ~uint64_t( 0 ) );
      tt.mask_tail();
    }
    return tt;
  }

  /*! \brief Builds a table of arity at most 6 from a packed bit word. */
  static truth_table from_uint( uint32_t num_vars, uint64_t bits )
  {
    truth_table tt( num_vars );
    if ( num_vars > 6u )
    {
      throw std::invalid_argument( "truth_table::from_uint: arity exceeds 6" );
    }
    tt._words[0] = bits & tt.tail_mask();
    return tt;
  }

  uint32_t num_vars() const { return _num_vars; }
  uint64_t num_bits() const { return uint64_t( 1 ) << _num_vars; }

  bool get_bit( uint64_t index ) const
  {
    assert( index < num_bits() );
    return ( _words[index >> 6u] >> ( index & 63u ) ) & 1u;
  }

  void set_bit( uint64_t index, bool value = true )
  {
    if ( index >= num_bits() )
    {
      throw std::invalid_argument( "truth_table::set_bit: minterm index out of range" );
    }
    if ( value )
    {
      _words[index >> 6u] |= uint64_t( 1 ) << ( index & 63u );
    }
    else
    {
      _words[index >> 6u] &= ~( uint64_t( 1 ) << ( index & 63u ) );
    }
  }

  /*! \brief Number of true minterms. */
  uint64_t count_ones() const
  {
    uint64_t sum = 0u;
    for ( auto w : _words )
    {
      sum += static_cast<uint64_t>( __builtin_popcountll( w ) );
    }
    return sum;
  }

  bool is_const0() const
  {
    return std::all_of( _words.begin(), _words.end(), []( uint64_t w ) { return w == 0u; } );
  }

  bool is_const1() const { return count_ones() == num_bits(); }

  /*! \brief Calls fn(index) for every true minterm, in ascending order. */
  template<typename Fn>
  void for_each_one( Fn&& fn ) const
  {
    for ( uint64_t wi = 0u; wi < _words.size(); ++wi )
    {
      uint64_t w = _words[wi];
      while ( w )
      {
        const auto bit = static_cast<uint64_t>( __builtin_ctzll( w ) );
        fn( ( wi << 6u ) | bit );
        w &= w - 1u;
      }
    }
  }

  /*! \brief All true minterm indices in ascending order. */
  std::vector<uint64_t> one_indices() const
  {
    std::vector<uint64_t> ones;
    ones.reserve( count_ones() );
    for_each_one( [&]( uint64_t m ) { ones.push_back( m ); } );
    return ones;
  }

  /*! \brief Packs a table of arity at most 6 into a single word. */
  uint64_t to_uint() const
  {
    if ( _num_vars > 6u )
    {
      throw std::invalid_argument( "truth_table::to_uint: arity exceeds 6" );
    }
    return _words[0];
  }

  truth_table operator~() const
  {
    truth_table r( *this );
    for ( auto& w : r._words )
    {
      w = ~w;
    }
    r.mask_tail();
    return r;
  }

  truth_table operator&( const truth_table& other ) const { return combine( other, []( uint64_t a, uint64_t b ) { return a & b; } ); }
  truth_table operator|( const truth_table& other ) const { return combine( other, []( uint64_t a, uint64_t b ) { return a | b; } ); }
  truth_table operator^( const truth_table& other ) const { return combine( other, []( uint64_t a, uint64_t b ) { return a ^ b; } ); }

  truth_table& operator&=( const truth_table& other ) { return combine_inplace( other, []( uint64_t a, uint64_t b ) { return a & b; } ); }
  truth_table& operator|=( const truth_table& other ) { return combine_inplace( other, []( uint64_t a, uint64_t b ) { return a | b; } ); }
  truth_table& operator^=( const truth_table& other ) { return combine_inplace( other, []( uint64_t a, uint64_t b ) { return a ^ b; } ); }

  bool operator==( const truth_table& other ) const
  {
    return _num_vars == other._num_vars && _words == other._words;
  }

  bool operator!=( const truth_table& other ) const { return !( *this == other ); }

  /*! \brief Total order: by arity, then by bit vector read as a big integer. */
  bool operator<( const truth_table& other ) const
  {
    if ( _num_vars != other._num_vars )
    {
      return _num_vars < other._num_vars;
    }
    return std::lexicographical_compare( _words.rbegin(), _words.rend(),
                                         other._words.rbegin(), other._words.rend() );
  }

  uint64_t word( uint64_t index ) const { return _words[index]; }
  uint64_t word_count() const { return ( num_bits() + 63u ) >> 6u; }

  /*! \brief Overwrites one storage word; bits beyond 2^n are cleared. */
  void set_word( uint64_t index, uint64_t value )
  {
    _words[index] = value;
    if ( index + 1u == _words.size() )
    {
      mask_tail();
    }
  }

private:
  template<typename Op>
  truth_table combine( const truth_table& other, Op&& op ) const
  {
    truth_table r( *this );
    r.combine_inplace( other, op );
    return r;
  }

  template<typename Op>
  truth_table& combine_inplace( const truth_table& other, Op&& op )
  {
    if ( _num_vars != other._num_vars )
    {
      throw std::invalid_argument( "truth_table: arity mismatch in bitwise operation" );
    }
    for ( uint64_t i = 0u; i < _words.size(); ++i )
    {
      _words[i] = op( _words[i], other._words[i] );
    }
    return *this;
  }

  uint64_t tail_mask() const
  {
    const auto used = num_bits() & 63u;
    return used == 0u ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << used ) - 1u );
  }

  void mask_tail() { _words.back() &= tail_mask(); }

  uint32_t _num_vars;
  std::vector<uint64_t> _words;
};

namespace detail
{

/* Bit positions whose index has a 0 at bit log2(stride), for strides below 64. */
inline constexpr uint64_t interleave_mask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

} // namespace detail

/*! \brief Returns f with variable x_var replaced by its complement.

  \param var variable index, 1-based
*/
inline truth_table flip_variable( const truth_table& f, uint32_t var )
{
  if ( var == 0u || var > f.num_vars() )
  {
    throw std::invalid_argument( "flip_variable: variable index out of range" );
  }
  truth_table r( f.num_vars() );
  const auto shift = var - 1u;
  if ( shift < 6u )
  {
    const auto mask = detail::interleave_mask[shift];
    const auto s = uint64_t( 1 ) << shift;
    for ( uint64_t i = 0u; i < f.word_count(); ++i )
    {
      const auto w = f.word( i );
      r.set_word( i, ( ( w & mask ) << s ) | ( ( w & ~mask ) >> s ) );
    }
  }
  else
  {
    const auto word_stride = uint64_t( 1 ) << ( shift - 6u );
    for ( uint64_t i = 0u; i < f.word_count(); ++i )
    {
      r.set_word( i, f.word( i ^ word_stride ) );
    }
  }
  return r;
}

} // namespace rootfn
