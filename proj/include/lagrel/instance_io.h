#ifndef LAGREL_INSTANCE_IO_H_
#define LAGREL_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "lagrel/instance.h"

namespace lagrel {

// {"c":[...],"A":[[...]],"b":[...],"C":[[...]],"d":[...],"m":int,"p":int}
// "C" and "d" may be omitted or empty. Throws DimensionError on malformed or
// inconsistent input.
MilpInstance ParseInstanceJson(std::string_view text);
MilpInstance LoadInstanceFile(const std::string& path);

std::string InstanceToJson(const MilpInstance& instance);

}  // namespace lagrel

#endif  // LAGREL_INSTANCE_IO_H_
