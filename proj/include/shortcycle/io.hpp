#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "shortcycle/certificate.hpp"
#include "shortcycle/digraph.hpp"
#include "shortcycle/rainbow_instance.hpp"
#include "shortcycle/rational.hpp"

namespace shortcycle {

// Text formats. Digraph:
//   digraph <n> <m>
//   <u> <v>            (m lines)
// Rainbow instance:
//   rainbow <n> <m>
//   u-v[,u-v]          (m lines, one family per line)
// Blank lines and lines starting with '#' are ignored. Parse errors throw
// InvalidInput with a line number.
Digraph parse_digraph(std::string_view text);
RainbowInstance parse_rainbow(std::string_view text);

std::string format_digraph(const Digraph& d);
std::string format_rainbow(const RainbowInstance& inst);

std::string read_file(const std::string& path);

// JSON encodings. Integers that do not fit in 64 bits are emitted as
// decimal strings.
nlohmann::ordered_json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const CycleCertificate& c);
CycleCertificate cycle_certificate_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const RainbowCycleCertificate& c);
RainbowCycleCertificate rainbow_certificate_from_json(
    const nlohmann::ordered_json& j);

}  // namespace shortcycle
