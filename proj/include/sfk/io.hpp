#pragma once

#include <string>

namespace sfk {

/// Writes to path.tmp then renames over path. Throws Error(Io).
void writeFileAtomic(const std::string& path, const std::string& content);

std::string readFile(const std::string& path);

}  // namespace sfk
