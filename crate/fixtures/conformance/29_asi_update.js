var i = 0
var j = 1
i
++j
i++
j
