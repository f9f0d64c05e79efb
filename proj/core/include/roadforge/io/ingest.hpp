#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "roadforge/config.hpp"
#include "roadforge/polyline.hpp"

namespace roadforge::io {

enum class InputFormat {
    kGeoJson,   ///< LineString / MultiLineString features
    kCsvXy,     ///< two numeric columns x,y in meters; blank line starts a new track
    kCsvLonLat  ///< two numeric columns lon,lat in degrees
};

/// `.geojson`/`.json` -> GeoJSON, `.csv`/`.txt` -> CSV x,y.
/// Throws InvalidParameterError when the extension is not recognizable.
InputFormat infer_format(const std::string& path);

struct IngestResult {
    std::vector<RoadPolyline> polylines;       ///< in file order
    std::size_t duplicates_removed{0};
    std::size_t skipped{0};                    ///< features/tracks dropped
    std::vector<std::string> warnings;
};

/// Reads polylines from a GIS file. Duplicate consecutive points are dropped
/// with a count reported; degenerate tracks (< 2 points) are skipped with a
/// warning. Lon/lat inputs (csv-lonlat, or `projection` set) are projected to
/// a local tangent plane in meters (equirectangular about the polyline
/// centroid, Earth radius 6371000 m); polylines spanning more than 1 degree
/// are refused. Throws ParseError on malformed content, IoError on I/O.
IngestResult ingest(const std::string& path, InputFormat format,
                    Projection projection = Projection::kNone);

}  // namespace roadforge::io
