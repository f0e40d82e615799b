#pragma once

#include "catalog.hpp"
#include "checks.hpp"
#include "findim.hpp"
#include "localization.hpp"
#include "qgroup.hpp"
