#pragma once

#include <span>
#include <string_view>

namespace edgereg {

/// A data file compiled into the library; `path` is relative to data/.
struct EmbeddedFile {
  std::string_view path;
  std::string_view text;
};

/// All embedded data files, sorted by path.
std::span<const EmbeddedFile> embedded_fixtures();

}  // namespace edgereg
