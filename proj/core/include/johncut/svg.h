#pragma once

#include <string>
#include <vector>

#include "johncut/partition.h"
#include "johncut/rotund.h"

namespace johncut {

struct SvgOverlay {
  std::vector<Disk> disks;
  std::vector<std::vector<Vec2>> curves;  // witness curves
  std::vector<Segment> slits;
};

// 1000x1000 viewbox with 2% margin: pieces in a fixed palette keyed by
// index, exceptional pieces gray, cuts red, overlay disks/curves/slits on
// top. Coordinates written at fixed precision so output is reproducible.
void write_partition_svg(const std::string& path, const Partition& part,
                         const SvgOverlay& overlay = {});

}  // namespace johncut
