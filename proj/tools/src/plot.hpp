#pragma once

#include <span>
#include <string>
#include <string_view>

#include "abcopt/experiment.hpp"

namespace abcopt::cli {

enum class Measure { sd, me, afe, sr };

/// "sd", "me", "afe" or "sr" (case-insensitive); throws ConfigError otherwise.
Measure parse_measure(std::string_view name);
std::string_view measure_label(Measure m);
double measure_value(const Summary& s, Measure m);

/// SVG document with one bar-chart panel per problem and one bar per
/// algorithm, in the order the summaries appear. Throws ConfigError when
/// `summaries` is empty.
std::string render_bar_chart(std::span<const Summary> summaries, Measure measure);

}  // namespace abcopt::cli
