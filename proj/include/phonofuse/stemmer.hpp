#pragma once

#include <string>
#include <string_view>

namespace phonofuse {

/// Porter's m: the number of VC sequences in the [C](VC)^m[V] form of a
/// word. 'y' is a vowel when it follows a consonant.
int measure(std::string_view word);

/// Porter (1980) suffix stripping, steps 1a through 5b. Expects lowercase
/// a-z; words of two letters or fewer come back unchanged.
std::string stem(std::string_view word);

}  // namespace phonofuse
