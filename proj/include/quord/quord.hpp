#pragma once

#include "quord/dimension.hpp"
#include "quord/error.hpp"
#include "quord/extension.hpp"
#include "quord/halfspace.hpp"
#include "quord/io.hpp"
#include "quord/oracle.hpp"
#include "quord/product.hpp"
#include "quord/relation.hpp"
