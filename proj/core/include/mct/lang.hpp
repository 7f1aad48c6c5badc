#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace mct {

/// The six benchmark languages. Enum order is the canonical iteration and
/// sort order everywhere (pools, censuses, sampling).
enum class Language { Python, Cpp, Java, Go, JavaScript, Rust };

inline constexpr std::array<Language, 6> kAllLanguages = {
    Language::Python, Language::Cpp,        Language::Java,
    Language::Go,     Language::JavaScript, Language::Rust};

/// Canonical tag used in record files and configs.
std::string_view language_name(Language lang);

/// Short display name used in report tables (Python, C++, Go, Java, JS, Rust).
std::string_view language_display(Language lang);

/// Accepts canonical tags plus common alternates ("C++", "CPP", "JS", "js").
/// Returns nullopt for unknown tags.
std::optional<Language> parse_language(std::string_view tag);

}  // namespace mct
