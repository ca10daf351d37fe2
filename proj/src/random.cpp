#include "wfuse/random.h"

namespace wfuse {

double RandomStream::next_uniform() {
  return static_cast<double>(next_bits53()) * 0x1.0p-53;
}

}  // namespace wfuse
