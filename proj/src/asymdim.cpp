// placeholder, replaced as the corresponding module lands
