#include "nel/core/error.hpp"

namespace nel {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Structural: return "structural";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Computational: return "computational";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace nel
