#pragma once

// Reference classification of projective lines over commutative rings with unity of
// orders 2..31. One record per representative ring; rings offered as alternatives for
// the same line type get one record each with identical numbers.
//
// partial = true marks line types with further representatives that have no
// constructor in the expression language; only the named constructions are listed.

#include <array>
#include <cstddef>
#include <string_view>

namespace ringline::catalog_data {

struct Record {
  std::string_view type;  // A/B
  std::size_t tot, tp_one, one_n, cap2n, cap3n, jcb, md;
  std::string_view expr;
  bool partial;
};

// clang-format off
inline constexpr std::array records = {
  //      type    Tot TpI  1N ∩2N ∩3N Jcb  MD  representative
  Record{"31/1",   32, 32,  0,  0,  0,  0, 32, "GF(31)", false},
  Record{"30/22",  72, 52, 41, 20,  6,  7,  3, "GF(2) x GF(3) x GF(5)", false},
  Record{"29/1",   30, 30,  0,  0,  0,  0, 30, "GF(29)", false},
  Record{"28/10",  40, 38, 11,  2,  0,  3,  5, "GF(4) x GF(7)", false},
  Record{"28/16",  48, 44, 19,  4,  0, 11,  3, "GF(7) x Z4", false},
  Record{"28/16",  48, 44, 19,  4,  0, 11,  3, "GF(7) x GF(2)[x]/(x^2)", false},
  Record{"28/22",  72, 50, 43, 22,  6,  5,  3, "GF(2) x GF(2) x GF(7)", false},
  Record{"27/1",   28, 28,  0,  0,  0,  0, 28, "GF(27)", false},
  Record{"27/9",   36, 36,  8,  0,  0,  8,  4, "Z27", true},
  Record{"27/9",   36, 36,  8,  0,  0,  8,  4, "GF(3)[x]/(x^3)", true},
  Record{"27/11",  40, 38, 12,  2,  0,  6,  4, "GF(3) x GF(9)", false},
  Record{"27/15",  48, 42, 20,  6,  0,  2,  4, "GF(3) x Z9", false},
  Record{"27/15",  48, 42, 20,  6,  0,  2,  4, "GF(3) x GF(3)[x]/(x^2)", false},
  Record{"27/19",  64, 46, 36, 18,  6,  0,  4, "GF(3) x GF(3) x GF(3)", false},
  Record{"26/14",  42, 40, 15,  2,  0, 11,  3, "GF(2) x GF(13)", false},
  Record{"25/1",   26, 26,  0,  0,  0,  0, 26, "GF(25)", false},
  Record{"25/5",   30, 30,  4,  0,  0,  4,  6, "Z25", false},
  Record{"25/5",   30, 30,  4,  0,  0,  4,  6, "GF(5)[x]/(x^2)", false},
  Record{"25/9",   36, 34, 10,  2,  0,  0,  6, "GF(5) x GF(5)", false},
  Record{"24/10",  36, 34, 11,  2,  0,  5,  4, "GF(3) x GF(8)", false},
  Record{"24/16",  48, 40, 23,  8,  0,  7,  3, "GF(3) x Z8", true},
  Record{"24/16",  48, 40, 23,  8,  0,  7,  3, "GF(3) x GF(2)[x]/(x^3)", true},
  Record{"24/18",  60, 42, 35, 18,  6,  5,  3, "GF(2) x GF(3) x GF(4)", false},
  Record{"24/20",  72, 44, 47, 28, 12,  3,  3, "GF(2) x GF(3) x Z4", false},
  Record{"24/20",  72, 44, 47, 28, 12,  3,  3, "GF(2) x GF(3) x GF(2)[x]/(x^2)", false},
  Record{"24/22", 108, 46, 83, 62, 42,  1,  3, "GF(2) x GF(2) x GF(2) x GF(3)", false},
  Record{"23/1",   24, 24,  0,  0,  0,  0, 24, "GF(23)", false},
  Record{"22/12",  36, 34, 13,  2,  0,  9,  3, "GF(2) x GF(11)", false},
  Record{"21/9",   32, 30, 10,  2,  0,  4,  4, "GF(3) x GF(7)", false},
  Record{"20/8",   30, 28,  9,  2,  0,  1,  5, "GF(5) x GF(4)", false},
  Record{"20/12",  36, 32, 15,  4,  0,  7,  3, "GF(5) x Z4", false},
  Record{"20/12",  36, 32, 15,  4,  0,  7,  3, "GF(5) x GF(2)[x]/(x^2)", false},
  Record{"20/16",  54, 36, 33, 18,  6,  3,  3, "GF(5) x GF(2) x GF(2)", false},
  Record{"19/1",   20, 20,  0,  0,  0,  0, 20, "GF(19)", false},
  Record{"18/10",  30, 28, 11,  2,  0,  7,  3, "GF(2) x GF(9)", false},
  Record{"18/12",  36, 30, 17,  6,  0,  5,  3, "GF(2) x Z9", false},
  Record{"18/12",  36, 30, 17,  6,  0,  5,  3, "GF(2) x GF(3)[x]/(x^2)", false},
  Record{"18/14",  48, 32, 29, 16,  6,  3,  3, "GF(2) x GF(3) x GF(3)", false},
  Record{"17/1",   18, 18,  0,  0,  0,  0, 18, "GF(17)", false},
  Record{"16/1",   17, 17,  0,  0,  0,  0, 17, "GF(16)", false},
  Record{"16/4",   20, 20,  3,  0,  0,  3,  5, "Z4[x]/(x^2+x+1)", false},
  Record{"16/4",   20, 20,  3,  0,  0,  3,  5, "GF(4)[x]/(x^2)", false},
  Record{"16/7",   25, 23,  8,  2,  0,  0,  5, "GF(4) x GF(4)", false},
  Record{"16/8",   24, 24,  7,  0,  0,  7,  3, "Z16", true},
  Record{"16/8",   24, 24,  7,  0,  0,  7,  3, "Z4[x]/(x^2)", true},
  Record{"16/8",   24, 24,  7,  0,  0,  7,  3, "GF(2)[x]/(x^4)", true},
  Record{"16/9",   27, 25, 10,  2,  0,  6,  3, "GF(2) x GF(8)", false},
  Record{"16/10",  30, 26, 13,  4,  0,  5,  3, "GF(4) x Z4", false},
  Record{"16/10",  30, 26, 13,  4,  0,  5,  3, "GF(4) x GF(2)[x]/(x^2)", false},
  Record{"16/12",  36, 28, 19,  8,  0,  3,  3, "Z4 x Z4", true},
  Record{"16/12",  36, 28, 19,  8,  0,  3,  3, "GF(2) x Z8", true},
  Record{"16/13",  45, 29, 28, 16,  6,  2,  3, "GF(2) x GF(2) x GF(4)", false},
  Record{"16/14",  54, 30, 37, 24, 12,  1,  3, "GF(2) x GF(2) x Z4", false},
  Record{"16/14",  54, 30, 37, 24, 12,  1,  3, "GF(2) x GF(2) x GF(2)[x]/(x^2)", false},
  Record{"16/15",  81, 31, 64, 50, 36,  0,  3, "GF(2) x GF(2) x GF(2) x GF(2)", false},
  Record{"15/7",   24, 22,  8,  2,  0,  2,  4, "GF(3) x GF(5)", false},
  Record{"14/8",   24, 22,  9,  2,  0,  5,  3, "GF(2) x GF(7)", false},
  Record{"13/1",   14, 14,  0,  0,  0,  0, 14, "GF(13)", false},
  Record{"12/6",   20, 18,  7,  2,  0,  1,  4, "GF(3) x GF(4)", false},
  Record{"12/8",   24, 20, 11,  4,  0,  3,  3, "GF(3) x Z4", false},
  Record{"12/8",   24, 20, 11,  4,  0,  3,  3, "GF(3) x GF(2)[x]/(x^2)", false},
  Record{"12/10",  36, 22, 23, 14,  6,  1,  3, "GF(2) x GF(2) x GF(3)", false},
  Record{"11/1",   12, 12,  0,  0,  0,  0, 12, "GF(11)", false},
  Record{"10/6",   18, 16,  7,  2,  0,  3,  3, "GF(2) x GF(5)", false},
  Record{"9/1",    10, 10,  0,  0,  0,  0, 10, "GF(9)", false},
  Record{"9/3",    12, 12,  2,  0,  0,  2,  4, "Z9", false},
  Record{"9/3",    12, 12,  2,  0,  0,  2,  4, "GF(3)[x]/(x^2)", false},
  Record{"9/5",    16, 14,  6,  2,  0,  0,  4, "GF(3) x GF(3)", false},
  Record{"8/1",     9,  9,  0,  0,  0,  0,  9, "GF(8)", false},
  Record{"8/4",    12, 12,  3,  0,  0,  3,  3, "Z8", true},
  Record{"8/4",    12, 12,  3,  0,  0,  3,  3, "GF(2)[x]/(x^3)", true},
  Record{"8/5",    15, 13,  6,  2,  0,  2,  3, "GF(2) x GF(4)", false},
  Record{"8/6",    18, 14,  9,  4,  0,  1,  3, "GF(2) x Z4", false},
  Record{"8/6",    18, 14,  9,  4,  0,  1,  3, "GF(2) x GF(2)[x]/(x^2)", false},
  Record{"8/7",    27, 15, 18, 12,  6,  0,  3, "GF(2) x GF(2) x GF(2)", false},
  Record{"7/1",     8,  8,  0,  0,  0,  0,  8, "GF(7)", false},
  Record{"6/4",    12, 10,  5,  2,  0,  1,  3, "GF(2) x GF(3)", false},
  Record{"5/1",     6,  6,  0,  0,  0,  0,  6, "GF(5)", false},
  Record{"4/1",     5,  5,  0,  0,  0,  0,  5, "GF(4)", false},
  Record{"4/2",     6,  6,  1,  0,  0,  1,  3, "Z4", false},
  Record{"4/2",     6,  6,  1,  0,  0,  1,  3, "GF(2)[x]/(x^2)", false},
  Record{"4/3",     9,  7,  4,  2,  0,  0,  3, "GF(2) x GF(2)", false},
  Record{"3/1",     4,  4,  0,  0,  0,  0,  4, "GF(3)", false},
  Record{"2/1",     3,  3,  0,  0,  0,  0,  3, "GF(2)", false},
};
// clang-format on

}  // namespace ringline::catalog_data
