#include <cstdlib>
#include <string>

#include "fusionkit/graphs.hpp"

#ifndef FUSIONKIT_DEFAULT_DATA
#define FUSIONKIT_DEFAULT_DATA "data"
#endif

namespace fk {

std::string data_dir() {
  const char* env = std::getenv("FUSIONKIT_DATA");
  if (env && *env) return env;
  return FUSIONKIT_DEFAULT_DATA;
}

}  // namespace fk
