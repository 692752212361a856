#pragma once

#include <string>
#include <vector>

namespace dmm::ops {

/// Marks a public operation as exercised.  verify-paper asserts at the end
/// of a full run that every registered operation was touched at least once.
void touch(const std::string& op);

std::vector<std::string> registered();
std::vector<std::string> untouched();
void reset();

}  // namespace dmm::ops
