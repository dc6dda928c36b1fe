#ifndef DCT_TRI_HPP
#define DCT_TRI_HPP

#include <string>

namespace dct {

// Three-valued answer for order queries that are only semidecidable.
enum class Tri { False, True, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "unknown";
  }
}

}  // namespace dct

#endif
