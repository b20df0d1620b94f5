#pragma once
#include "spencer/report.hpp"
namespace spencer {}
