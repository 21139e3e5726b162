#pragma once

#include <iosfwd>
#include <string>

#include "cnfsimp/dimacs.hpp" // ParseError
#include "cnfsimp/undo.hpp"

namespace cnfsimp {

// Serializes a map file:
//
//   original variables
//   <count>
//   compress tables            (or the single line "no table")
//   table 0 <count>
//   <forward...> 0
//   units 0
//   <units...> 0
//   end table
//   ee table
//   <rep> <members...> 0       (one line per class)
//   postprocess stack
//   ee | bce <l> | ve <v> <n>  (entries in application order; bce and ve are
//                               followed by their 0-terminated clause lines)
std::string write_map_file(const MapFile& m);

// Inverse of write_map_file. Accepts both the "compress tables" and
// "compress table" spellings. Misordered or missing section headers,
// unterminated literal lines, short ve entries and a table index other
// than 0 raise ParseError.
MapFile parse_map_file(std::istream& in);
MapFile parse_map_file(const std::string& text);

} // namespace cnfsimp
