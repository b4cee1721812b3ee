#include "neo/alphabet.hpp"

#include <string>

#include "neo/errors.hpp"

namespace neo {

bool is_canonical_residue(char letter) {
    return kAlphabet.find(letter) != std::string_view::npos;
}

int residue_code(char letter) {
    const auto pos = kAlphabet.find(letter);
    if (pos == std::string_view::npos) {
        throw DataError(std::string("invalid residue '") + letter + "'");
    }
    return static_cast<int>(pos);
}

char residue_letter(int code) {
    if (code < 0 || code >= kAlphabetSize) {
        throw DataError("residue code " + std::to_string(code) + " out of range [0,19]");
    }
    return kAlphabet[static_cast<std::size_t>(code)];
}

}  // namespace neo
