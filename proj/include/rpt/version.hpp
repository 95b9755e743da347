#ifndef RPT_VERSION_HPP
#define RPT_VERSION_HPP

namespace rpt
{

inline constexpr const char* version = "0.1.0";

} // namespace rpt

#endif
