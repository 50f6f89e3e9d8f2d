#ifndef DOMAINGAUGE_SHA256_HPP
#define DOMAINGAUGE_SHA256_HPP

#include <string>

namespace dg {

/// Hex digest of the SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace dg

#endif
