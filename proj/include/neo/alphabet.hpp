#pragma once

#include <cstddef>
#include <string_view>

namespace neo {

// Canonical amino-acid alphabet, sorted. A residue's code is its position;
// kPadCode fills tokenized sequences past their valid length.
inline constexpr std::string_view kAlphabet = "ACDEFGHIKLMNPQRSTVWY";
inline constexpr int kAlphabetSize = 20;
inline constexpr int kPadCode = 20;

inline constexpr std::size_t kMinPeptideLen = 8;
inline constexpr std::size_t kMaxPeptideLen = 25;

bool is_canonical_residue(char letter);

// DataError naming the offending letter / code
int residue_code(char letter);
char residue_letter(int code);

}  // namespace neo
